# keeps the tests directory importable for shared helpers (_oracle)
