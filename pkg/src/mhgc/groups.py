"""Finite groups as explicit multiplication tables.

Elements are integers 0..order-1.  Construction validates the whole
table (closure, identity, inverses, associativity); the intended scale
is small (order <= 24), so the cubic associativity sweep is fine.
"""

from itertools import permutations

from .errors import GroupError, ParseError


class FiniteGroup:
    __slots__ = ("order", "mul", "identity", "inv", "labels")

    def __init__(self, mul, labels=None):
        n = len(mul)
        if n == 0:
            raise GroupError("empty table")
        for row in mul:
            if len(row) != n or any(not (0 <= x < n) for x in row):
                raise GroupError("table is not a closed %dx%d square" % (n, n))
        self.order = n
        self.mul = tuple(tuple(row) for row in mul)
        ident = next((e for e in range(n)
                      if all(mul[e][x] == x and mul[x][e] == x
                             for x in range(n))), None)
        if ident is None:
            raise GroupError("no identity element")
        self.identity = ident
        inv = []
        for x in range(n):
            xinv = next((y for y in range(n)
                         if mul[x][y] == ident and mul[y][x] == ident), None)
            if xinv is None:
                raise GroupError("element %d has no inverse" % x)
            inv.append(xinv)
        self.inv = tuple(inv)
        for a in range(n):
            for b in range(n):
                ab = mul[a][b]
                for c in range(n):
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        raise GroupError(
                            "associativity fails at (%d,%d,%d)" % (a, b, c))
        self.labels = tuple(labels) if labels else tuple(
            str(i) for i in range(n))

    def op(self, a, b):
        return self.mul[a][b]

    def elements(self):
        return range(self.order)

    def is_subgroup(self, elems):
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.mul[a][self.inv[b]] in s for a in s for b in s)

    def opposite(self):
        n = self.order
        return FiniteGroup([[self.mul[b][a] for b in range(n)]
                            for a in range(n)], labels=self.labels)

    @classmethod
    def trivial(cls):
        return cls([[0]], labels=["e"])

    @classmethod
    def cyclic(cls, n):
        if n < 1:
            raise GroupError("cyclic group needs n >= 1")
        labels = ["e"] + ["g%d" % i for i in range(1, n)]
        return cls([[(a + b) % n for b in range(n)] for a in range(n)],
                   labels=labels)

    @classmethod
    def symmetric(cls, n):
        perms = sorted(permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        # composition convention: (p*q)(i) = p(q(i))
        mul = [[index[tuple(p[q[i]] for i in range(n))] for q in perms]
               for p in perms]
        labels = ["".join(str(x + 1) for x in p) for p in perms]
        return cls(mul, labels=labels)

    @classmethod
    def named(cls, name):
        key = name.strip().lower()
        if key in ("trivial", "e", "1"):
            return cls.trivial()
        if key.startswith("z") and key[1:].isdigit():
            return cls.cyclic(int(key[1:]))
        if key.startswith("c") and key[1:].isdigit():
            return cls.cyclic(int(key[1:]))
        if key.startswith("cyclic:"):
            return cls.cyclic(int(key.split(":", 1)[1]))
        if key.startswith("s") and key[1:].isdigit():
            return cls.symmetric(int(key[1:]))
        raise ParseError("unknown group name %r" % name)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.mul == other.mul

    def __repr__(self):  # pragma: no cover
        return "FiniteGroup(order=%d)" % self.order
