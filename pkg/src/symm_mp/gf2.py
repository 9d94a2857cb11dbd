"""Finite graded algebras over GF(2): hard-coded surface cohomology
rings, tensor products, induced maps, kernels, and kernel cup-length
search by exhaustive enumeration.

Elements are stored as one bitmask per degree; products go through an
explicit basis-by-basis multiplication table.  Everything is small enough
that associativity, commutativity and multiplicativity are checked
exhaustively at construction time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct


class RelationViolated(ValueError):
    pass


@dataclass(frozen=True)
class GradedAlgebra:
    """Graded commutative GF(2) algebra with unit in degree 0.

    basis[d] lists the labels of the degree-d basis; table maps a pair of
    basis coordinates (deg_i, idx_i, deg_j, idx_j) to a bitmask over the
    degree-(i+j) basis.  Missing entries mean the product is zero.
    """

    name: str
    basis: tuple[tuple[str, ...], ...]
    table: dict = field(repr=False)

    @property
    def top(self) -> int:
        return len(self.basis) - 1

    def dim(self, d: int) -> int:
        return len(self.basis[d]) if 0 <= d <= self.top else 0

    def mult_basis(self, i: int, a: int, j: int, b: int) -> int:
        if i + j > self.top:
            return 0
        return self.table.get((i, a, j, b), 0)

    def validate(self) -> None:
        """Exhaustive unit/commutativity/associativity/degree checks."""
        if self.dim(0) != 1:
            raise RelationViolated("degree 0 must be spanned by the unit")
        pairs = [
            (i, a) for i in range(self.top + 1) for a in range(self.dim(i))
        ]
        for j, b in pairs:
            if self.mult_basis(0, 0, j, b) != (1 << b):
                raise RelationViolated("unit does not act as identity")
        for (i, a), (j, b) in iproduct(pairs, pairs):
            if self.mult_basis(i, a, j, b) != self.mult_basis(j, b, i, a):
                raise RelationViolated("table is not commutative")
        for (i, a), (j, b), (k, c) in iproduct(pairs, pairs, pairs):
            left = self._mask_mult(
                i + j, self.mult_basis(i, a, j, b), k, c, right=True
            )
            right = self._mask_mult(
                j + k, self.mult_basis(j, b, k, c), i, a, right=False
            )
            if left != right:
                raise RelationViolated("table is not associative")

    def _mask_mult(self, deg: int, mask: int, j: int, b: int, right: bool) -> int:
        out = 0
        for a in _bits(mask):
            out ^= (
                self.mult_basis(deg, a, j, b)
                if right
                else self.mult_basis(j, b, deg, a)
            )
        return out


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1
    return


@dataclass(frozen=True, eq=False)
class GradedElement:
    algebra: GradedAlgebra
    masks: tuple[int, ...]  # one bitmask per degree 0..top

    def __post_init__(self):
        if len(self.masks) != self.algebra.top + 1:
            raise ValueError("mask vector length does not match grading")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedElement)
            and self.algebra is other.algebra
            and self.masks == other.masks
        )

    def __hash__(self):
        return hash((id(self.algebra), self.masks))

    def is_zero(self) -> bool:
        return all(m == 0 for m in self.masks)

    def is_homogeneous(self) -> bool:
        return sum(1 for m in self.masks if m) <= 1

    def degree(self) -> int | None:
        """Degree of a nonzero homogeneous element."""
        live = [d for d, m in enumerate(self.masks) if m]
        if len(live) != 1:
            return None
        return live[0]

    def __add__(self, other: "GradedElement") -> "GradedElement":
        _same_algebra(self, other)
        return GradedElement(
            self.algebra, tuple(a ^ b for a, b in zip(self.masks, other.masks))
        )

    def __mul__(self, other: "GradedElement") -> "GradedElement":
        _same_algebra(self, other)
        alg = self.algebra
        out = [0] * (alg.top + 1)
        for i, mi in enumerate(self.masks):
            if not mi:
                continue
            for j, mj in enumerate(other.masks):
                if not mj or i + j > alg.top:
                    continue
                for a in _bits(mi):
                    for b in _bits(mj):
                        out[i + j] ^= alg.mult_basis(i, a, j, b)
        return GradedElement(alg, tuple(out))

    def label(self) -> str:
        terms = []
        for d, m in enumerate(self.masks):
            for a in _bits(m):
                terms.append(self.algebra.basis[d][a])
        return " + ".join(terms) if terms else "0"


def _same_algebra(x: GradedElement, y: GradedElement) -> None:
    if x.algebra is not y.algebra:
        raise ValueError("elements live in different algebras")


def zero(alg: GradedAlgebra) -> GradedElement:
    return GradedElement(alg, tuple(0 for _ in range(alg.top + 1)))


def unit(alg: GradedAlgebra) -> GradedElement:
    return basis_element(alg, 0, 0)


def basis_element(alg: GradedAlgebra, deg: int, idx: int) -> GradedElement:
    masks = [0] * (alg.top + 1)
    masks[deg] = 1 << idx
    return GradedElement(alg, tuple(masks))


def from_label(alg: GradedAlgebra, name: str) -> GradedElement:
    for d, names in enumerate(alg.basis):
        if name in names:
            return basis_element(alg, d, names.index(name))
    raise KeyError(name)


# -- catalog rings ----------------------------------------------------------


def _symmetrize(table: dict) -> dict:
    out = dict(table)
    for (i, a, j, b), m in table.items():
        out[(j, b, i, a)] = m
    return out


def _with_unit(basis, table):
    full = dict(table)
    for d, names in enumerate(basis):
        for a in range(len(names)):
            full[(0, 0, d, a)] = 1 << a
    return _symmetrize(full)


def torus_ring() -> GradedAlgebra:
    """Degree-1 generators u, v with u^2 = v^2 = 0 and u v = top class."""
    basis = (("1",), ("u", "v"), ("uv",))
    table = {
        (1, 0, 1, 1): 1,  # u * v = uv
        # u*u = v*v = 0 omitted
    }
    alg = GradedAlgebra("torus", basis, _with_unit(basis, table))
    alg.validate()
    return alg


def klein_ring() -> GradedAlgebra:
    """Degree-1 generators s, t with s t = 0 and s^2 = t^2 = top class."""
    basis = (("1",), ("s", "t"), ("w",))
    table = {
        (1, 0, 1, 0): 1,  # s * s = w
        (1, 1, 1, 1): 1,  # t * t = w
        # s * t = 0 omitted
    }
    alg = GradedAlgebra("klein", basis, _with_unit(basis, table))
    alg.validate()
    return alg


def trivial_ring() -> GradedAlgebra:
    alg = GradedAlgebra("point", (("1",),), _with_unit((("1",),), {}))
    alg.validate()
    return alg


def tensor(A: GradedAlgebra, B: GradedAlgebra) -> GradedAlgebra:
    """Graded tensor product over GF(2) (no signs)."""
    top = A.top + B.top
    basis_pairs: list[list[tuple[int, int, int, int]]] = [[] for _ in range(top + 1)]
    labels: list[list[str]] = [[] for _ in range(top + 1)]
    index: dict[tuple[int, int, int, int], int] = {}
    for i in range(A.top + 1):
        for a in range(A.dim(i)):
            for j in range(B.top + 1):
                for b in range(B.dim(j)):
                    d = i + j
                    index[(i, a, j, b)] = len(basis_pairs[d])
                    basis_pairs[d].append((i, a, j, b))
                    la, lb = A.basis[i][a], B.basis[j][b]
                    labels[d].append(f"{la}(x){lb}")
    table: dict = {}
    for d1 in range(top + 1):
        for x1, (i1, a1, j1, b1) in enumerate(basis_pairs[d1]):
            for d2 in range(top + 1):
                if d1 + d2 > top:
                    continue
                for x2, (i2, a2, j2, b2) in enumerate(basis_pairs[d2]):
                    ma = A.mult_basis(i1, a1, i2, a2)
                    mb = B.mult_basis(j1, b1, j2, b2)
                    mask = 0
                    for aa in _bits(ma):
                        for bb in _bits(mb):
                            mask |= 1 << index[(i1 + i2, aa, j1 + j2, bb)]
                    if mask:
                        table[(d1, x1, d2, x2)] = mask
    alg = GradedAlgebra(
        f"{A.name}(x){B.name}",
        tuple(tuple(names) for names in labels),
        table,
    )
    alg.validate()
    return alg


# -- maps -------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraMap:
    """Degree-preserving multiplicative map given by basis images."""

    source: GradedAlgebra
    target: GradedAlgebra
    images: tuple[tuple[int, ...], ...]  # images[d][idx] = target mask in degree d

    def __post_init__(self):
        self._check_multiplicative()

    def apply_basis(self, d: int, idx: int) -> "GradedElement":
        masks = [0] * (self.target.top + 1)
        if d <= self.target.top:
            masks[d] = self.images[d][idx]
        elif self.images[d][idx]:
            raise RelationViolated("image above target top degree must vanish")
        return GradedElement(self.target, tuple(masks))

    def apply(self, x: GradedElement) -> GradedElement:
        if x.algebra is not self.source:
            raise ValueError("element not in the source algebra")
        out = zero(self.target)
        for d, m in enumerate(x.masks):
            for a in _bits(m):
                out = out + self.apply_basis(d, a)
        return out

    def _check_multiplicative(self) -> None:
        if self.apply(unit(self.source)) != unit(self.target):
            raise RelationViolated("unit is not preserved")
        src = self.source
        pairs = [(d, a) for d in range(src.top + 1) for a in range(src.dim(d))]
        for (i, a), (j, b) in iproduct(pairs, pairs):
            lhs = self.apply(basis_element(src, i, a) * basis_element(src, j, b))
            rhs = self.apply_basis(i, a) * self.apply_basis(j, b)
            if lhs != rhs:
                raise RelationViolated(
                    f"map not multiplicative on {src.basis[i][a]} * {src.basis[j][b]}"
                )


def map_from_images(source, target, images_by_label: dict) -> AlgebraMap:
    """Build an AlgebraMap from {source basis label: target element}."""
    images = []
    for d in range(source.top + 1):
        row = []
        for name in source.basis[d]:
            el = images_by_label[name]
            deg = el.degree()
            if el.is_zero():
                row.append(0)
            elif deg == d:
                row.append(el.masks[d])
            else:
                raise RelationViolated(f"image of {name} is not degree {d}")
        images.append(tuple(row))
    return AlgebraMap(source, target, tuple(images))


def pi_star(T: GradedAlgebra | None = None, K: GradedAlgebra | None = None) -> AlgebraMap:
    """Quotient-cover induced map: Klein ring -> torus ring."""
    T = T or torus_ring()
    K = K or klein_ring()
    u = from_label(T, "u")
    v = from_label(T, "v")
    images = {
        "1": unit(T),
        "s": u + v,
        "t": u + v,
        "w": zero(T),  # (u + v)^2 = 0 over GF(2)
    }
    return map_from_images(K, T, images)


def one_pi_star(
    T: GradedAlgebra | None = None,
    K: GradedAlgebra | None = None,
    TK: GradedAlgebra | None = None,
) -> AlgebraMap:
    """Graph-of-projection induced map: (torus x klein) ring -> torus ring.

    On decomposables x(x)y it is x . pi_star(y).
    """
    T = T or torus_ring()
    K = K or klein_ring()
    TK = TK or tensor(T, K)
    ps = pi_star(T, K)
    images = []
    for d in range(TK.top + 1):
        row = []
        for name in TK.basis[d]:
            la, lb = name.split("(x)")
            x = from_label(T, la) if la != "1" else unit(T)
            y = from_label(K, lb) if lb != "1" else unit(K)
            img = x * ps.apply(y)
            deg_mask = img.masks[d] if d <= T.top else 0
            if any(m for dd, m in enumerate(img.masks) if dd != d):
                raise RelationViolated("image is not degree preserving")
            row.append(deg_mask)
        images.append(tuple(row))
    return AlgebraMap(TK, T, tuple(images))


# -- kernels and cup length -------------------------------------------------


def kernel(m: AlgebraMap, degree: int) -> list[GradedElement]:
    """GF(2) null-space basis of the degree-d component of the map."""
    src = m.source
    n = src.dim(degree)
    rows = []
    for a in range(n):
        img = m.apply_basis(degree, a)
        img_mask = img.masks[degree] if degree <= m.target.top else 0
        rows.append([img_mask, 1 << a])
    # eliminate on image bits, tracking source combinations
    basis_out = []
    pivots: dict[int, list[int]] = {}
    for row in rows:
        img, comb = row
        while img:
            p = img.bit_length() - 1
            if p in pivots:
                img ^= pivots[p][0]
                comb ^= pivots[p][1]
            else:
                pivots[p] = [img, comb]
                break
        else:
            basis_out.append(comb)
    out = []
    for comb in basis_out:
        masks = [0] * (src.top + 1)
        masks[degree] = comb
        out.append(GradedElement(src, tuple(masks)))
    return out


def span_nonzero(vectors: list[GradedElement]) -> list[GradedElement]:
    """All nonzero GF(2) combinations of the given elements."""
    if not vectors:
        return []
    alg = vectors[0].algebra
    out = []
    for bits in range(1, 1 << len(vectors)):
        acc = zero(alg)
        for i in range(len(vectors)):
            if bits >> i & 1:
                acc = acc + vectors[i]
        out.append(acc)
    return out


def cup_length(
    elements_by_degree: dict[int, list[GradedElement]],
    alg: GradedAlgebra,
    max_m: int,
) -> tuple[int, list[GradedElement]]:
    """Largest m <= max_m with a nonzero m-fold product of the given
    positive-degree homogeneous elements; exhaustive search."""
    best_len = 0
    best_witness: list[GradedElement] = []

    degrees = sorted(d for d in elements_by_degree if d >= 1)

    def dfs(count, prod, factors, min_deg):
        nonlocal best_len, best_witness
        if count > best_len:
            best_len = count
            best_witness = list(factors)
        if count == max_m:
            return
        for d in degrees:
            if d < min_deg:
                continue
            for e in elements_by_degree[d]:
                p2 = prod * e
                if not p2.is_zero():
                    factors.append(e)
                    dfs(count + 1, p2, factors, d)
                    factors.pop()

    dfs(0, unit(alg), [], 1)
    return best_len, best_witness


def kernel_cup_length(m: AlgebraMap, max_m: int) -> tuple[int, list[GradedElement]]:
    src = m.source
    if max_m > src.top:
        raise ValueError("max_m exceeds the top degree of the source")
    elements = {
        d: span_nonzero(kernel(m, d)) for d in range(1, src.top + 1)
    }
    return cup_length(elements, src, max_m)


__all__ = [
    "GradedAlgebra",
    "GradedElement",
    "AlgebraMap",
    "RelationViolated",
    "zero",
    "unit",
    "basis_element",
    "from_label",
    "torus_ring",
    "klein_ring",
    "trivial_ring",
    "tensor",
    "pi_star",
    "one_pi_star",
    "map_from_images",
    "kernel",
    "span_nonzero",
    "cup_length",
    "kernel_cup_length",
]
