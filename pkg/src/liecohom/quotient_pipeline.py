"""Cohomology of G/H for a dense subgroup H, computed on the quotient algebra.

For connected G and dense H with Lie algebra h, the de Rham cohomology of
the quotient diffeological space is the cohomology of g/h.  Density itself
is not decidable from (g, h); it enters as a declared hypothesis carried in
the input's provenance note.

The chain-level justification is checkable and checked: pulling forms back
along the projection g -> g/h identifies the complex of g/h with the
subcomplex of h-horizontal forms on g, compatibly with the differentials.
"""

from math import comb

from .ce_complex import (
    DEFAULT_MAX_DIM,
    ExteriorForm,
    basis_form,
    cohomology,
    d_apply,
    evaluate,
    form_to_vector,
    horizontal_basis,
    index_tuples,
)
from .errors import (
    DimensionCapExceeded,
    DimensionMismatch,
    JacobiViolation,
    MixedFields,
    ParseError,
)
from .field_arith import Matrix, parse_scalar, rank
from .lie_core import (
    _require_keys,
    algebra_from_json,
    algebra_to_json,
    jacobi_check,
    quotient_algebra,
    subspace_from_json,
    subspace_to_json,
    torus_ideal_from_directions,
)


class DenseQuotientInput:
    """An algebra g, a candidate ideal h, and a note recording the model."""

    __slots__ = ("algebra", "ideal", "note")

    def __init__(self, algebra, ideal, note=""):
        if ideal.ambient_dim != algebra.dim:
            raise DimensionMismatch(
                "ideal ambient %d, algebra dim %d" % (ideal.ambient_dim, algebra.dim)
            )
        if ideal.field != algebra.field:
            raise MixedFields("ideal and algebra over different fields")
        self.algebra = algebra
        self.ideal = ideal
        self.note = str(note)

    def __repr__(self):
        return "DenseQuotientInput(%r, h dim %d)" % (self.algebra, self.ideal.size)


class DenseQuotientReport:
    """Result of the pipeline: quotient data plus the cohomology report."""

    __slots__ = ("algebra", "quotient_dim", "abelian_quotient", "report",
                 "chain_iso_verified", "note")

    def __init__(self, algebra, quotient_dim, abelian_quotient, report,
                 chain_iso_verified, note):
        self.algebra = algebra
        self.quotient_dim = quotient_dim
        self.abelian_quotient = abelian_quotient
        self.report = report
        self.chain_iso_verified = chain_iso_verified
        self.note = note

    def to_json(self):
        return {
            "algebra": self.algebra,
            "quotient_dim": self.quotient_dim,
            "abelian_quotient": self.abelian_quotient,
            "chain_iso_verified": self.chain_iso_verified,
            "note": self.note,
            "report": self.report.to_json(),
        }

    def __repr__(self):
        return "DenseQuotientReport(%r, betti=%r)" % (self.algebra, self.report.betti)


def pullback_form(projection, sigma):
    """Pull a form on the quotient back along the projection.

    The coefficient of the result on a basis tuple I is sigma evaluated on
    the projected basis vectors (pi e_i for i in I).
    """
    q, n = projection.rows, projection.cols
    if sigma.ambient != q:
        raise DimensionMismatch(
            "form on ambient %d, projection maps from %d to %d" % (sigma.ambient, n, q)
        )
    if sigma.field != projection.field:
        raise MixedFields("form and projection over different fields")
    k = sigma.degree
    columns = [projection.col(j) for j in range(n)]
    coeffs = {}
    for I in index_tuples(n, k):
        value = evaluate(sigma, [columns[a - 1] for a in I])
        if value:
            coeffs[I] = value
    return ExteriorForm(n, k, sigma.field, coeffs)


def chain_iso_check(L, h):
    """Verify degree by degree that pullback identifies the quotient complex
    with the horizontal subcomplex.

    Checks, for every degree: the horizontal space has dimension
    C(n - dim h, k); the pulled-back quotient basis is independent and lies
    inside the horizontal space; and d of a pullback equals the pullback of
    d.  Returns None on success, else (degree, form, reason) for the first
    failure.
    """
    qd = quotient_algebra(L, h)
    n, q = L.dim, qd.quotient.dim
    field = L.field
    for k in range(n + 1):
        horizontal = horizontal_basis(L, h, k)
        expected = comb(q, k)
        if len(horizontal) != expected:
            return (k, None, "horizontal dimension %d, expected %d"
                    % (len(horizontal), expected))
        if k > q:
            continue
        pulled = []
        for I in index_tuples(q, k):
            sigma = basis_form(field, q, I)
            pb = pullback_form(qd.projection, sigma)
            pulled.append((sigma, pb))
        hor_vectors = [form_to_vector(f) for f in horizontal]
        pb_vectors = [form_to_vector(pb) for _, pb in pulled]
        width = comb(n, k)
        if pb_vectors:
            if rank(Matrix.from_rows(field, pb_vectors, cols=width)) != len(pb_vectors):
                return (k, None, "pulled-back basis is linearly dependent")
            combined = hor_vectors + pb_vectors
            if rank(Matrix.from_rows(field, combined, cols=width)) != expected:
                sigma, pb = pulled[0]
                return (k, sigma, "pullback leaves the horizontal subspace")
        for sigma, pb in pulled:
            lhs = d_apply(L, pb)
            rhs = pullback_form(qd.projection, d_apply(qd.quotient, sigma))
            if lhs != rhs:
                return (k, sigma, "d does not commute with pullback")
    return None


def dense_quotient_cohomology(inp, check_chain_iso=True, max_dim=DEFAULT_MAX_DIM):
    """Run the whole pipeline on (g, h): validate, quotient, cohomology.

    The report's Betti numbers are those of g/h.  For an abelian quotient
    they are cross-checked against binomial coefficients.  When
    check_chain_iso is set (the default) the chain-level identification is
    verified and recorded in the report.
    """
    L = inp.algebra
    if L.dim > max_dim:
        raise DimensionCapExceeded(
            "dimension %d exceeds cap %d (the complex has 2^n basis forms)"
            % (L.dim, max_dim)
        )
    violations = jacobi_check(L)
    if violations:
        raise JacobiViolation(violations)
    qd = quotient_algebra(L, inp.ideal)  # raises NotAnIdeal with a witness
    report = cohomology(qd.quotient, max_dim=max_dim)
    abelian = qd.quotient.is_abelian
    if abelian:
        q = qd.quotient.dim
        expected = [comb(q, k) for k in range(q + 1)]
        if report.betti != expected:
            raise RuntimeError(
                "internal cross-check failed: abelian quotient Betti %r, expected %r"
                % (report.betti, expected)
            )
    chain_ok = False
    if check_chain_iso:
        failure = chain_iso_check(L, inp.ideal)
        if failure is not None:
            raise RuntimeError("chain isomorphism check failed: %r" % (failure,))
        chain_ok = True
    return DenseQuotientReport(
        algebra=L.name,
        quotient_dim=qd.quotient.dim,
        abelian_quotient=abelian,
        report=report,
        chain_iso_verified=chain_ok,
        note=inp.note,
    )


# ---------------------------------------------------------------------------
# pipeline input document:
# {"algebra": <algebra doc>,
#  "ideal": <subspace doc> | {"torus_directions": [[text, ...], ...]},
#  "note": str}

def pipeline_input_from_json(doc):
    _require_keys(doc, ("algebra", "ideal"), optional=("note",), what="pipeline input")
    algebra = algebra_from_json(doc["algebra"])
    ideal_doc = doc["ideal"]
    if not isinstance(ideal_doc, dict):
        raise ParseError("ideal must be a JSON object")
    if set(ideal_doc) == {"torus_directions"}:
        raw = ideal_doc["torus_directions"]
        if not isinstance(raw, list):
            raise ParseError("torus_directions must be a list of coordinate lists")
        directions = []
        for vec in raw:
            if not isinstance(vec, list):
                raise ParseError("each direction must be a list of scalar texts")
            directions.append([parse_scalar(x, algebra.field) for x in vec])
        try:
            ideal = torus_ideal_from_directions(algebra.dim, directions, algebra.field)
        except DimensionMismatch as exc:
            raise ParseError(str(exc)) from exc
    else:
        ideal = subspace_from_json(ideal_doc, algebra.dim, algebra.field)
    note = doc.get("note", "")
    if not isinstance(note, str):
        raise ParseError("note must be a string")
    return DenseQuotientInput(algebra, ideal, note)


def pipeline_input_to_json(inp):
    return {
        "algebra": algebra_to_json(inp.algebra),
        "ideal": subspace_to_json(inp.ideal),
        "note": inp.note,
    }
