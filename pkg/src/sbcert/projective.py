"""The unit-class group A*/K* at desk scale.

A class {c*x : c in K*} is stored by its canonical representative: scale x
so that the first nonzero of its nine K-coordinates (component index i,
then power j in the K-basis {1, zeta, zeta^2}) equals 1.  Scaling by K*
multiplies every K-coordinate by the same element of K, so the canonical
representative is a complete class invariant; class_eq() re-derives the
same relation by a direct ratio test and serves as the independent oracle.

The subgroup generated by the classes of zeta and alpha is expanded
breadth-first with canonical-form deduplication, tabulated, and compared
against the abstract semidirect product Z/p x| Z/3 whose twist is the
order-3 residue d.  Conjugation by alpha acts on <zeta-hat> as d^-1, so
the pairing that matches the abstract table as written is
phi(u, v) = xi-hat^u * (alpha-hat^2)^v.
"""

from dataclasses import dataclass, field as dataclass_field
from typing import Optional

from .algebra import AlgebraElem, CyclicAlgebra
from .cyclotomic import k_coordinate_vector, k_inverse_from_period_coords
from .errors import (
    CapExceeded,
    IsoFailure,
    ParamMismatch,
    RelationFailure,
    SbcertError,
    ZeroElement,
)

ISO_CONVENTION = "phi(u, v) = xi_hat^u * (alpha_hat^2)^v"


class ProjClass:
    """Canonical representative of an algebra unit modulo K*-scaling."""

    __slots__ = ("rep", "_key")

    def __init__(self, rep: AlgebraElem):
        self.rep = rep
        self._key = None

    @property
    def algebra(self) -> CyclicAlgebra:
        return self.rep.algebra

    @property
    def key(self):
        k = self._key
        if k is None:
            rep = self.rep
            k = (rep.algebra.field.p, rep.algebra.a,
                 rep.x0.coords, rep.x1.coords, rep.x2.coords)
            self._key = k
        return k

    def __mul__(self, other: "ProjClass") -> "ProjClass":
        return canonicalize(self.rep * other.rep)

    def __pow__(self, e: int) -> "ProjClass":
        if e < 0:
            return canonicalize(self.rep.inverse()) ** (-e)
        result = identity_class(self.algebra)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, ProjClass):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return f"ProjClass({self.rep!r})"


def canonicalize(x: AlgebraElem) -> ProjClass:
    """The canonical class representative of a nonzero algebra element."""
    if not x:
        raise ZeroElement("the zero element has no projective class")
    field = x.algebra.field
    k = field.k
    for comp in x.components:
        if comp:
            vec = k_coordinate_vector(field, comp.coords)
            for j in range(3):
                block = vec[j * k : (j + 1) * k]
                if any(block):
                    scale = k_inverse_from_period_coords(field, block)
                    return ProjClass(x.scale(scale))
    raise AssertionError("unreachable: nonzero element with zero K-coordinates")


def identity_class(algebra: CyclicAlgebra) -> ProjClass:
    return ProjClass(algebra.one())


def class_eq(x: AlgebraElem, y: AlgebraElem) -> bool:
    """Direct test for x = c*y with c in K*; independent of canonicalize()."""
    if not x or not y:
        raise ZeroElement("projective comparison of the zero element")
    if x.algebra != y.algebra:
        raise ParamMismatch("elements from different algebras")
    pivot = next(i for i, yc in enumerate(y.components) if yc)
    xc = x.components[pivot]
    if not xc:
        return False
    ratio = xc * y.components[pivot].inv()
    if not ratio.is_in_K():
        return False
    return x == y.scale(ratio)


def element_order(g: ProjClass, cap: int = None) -> int:
    """Smallest n >= 1 with g^n trivial; CapExceeded past the cap."""
    if cap is None:
        cap = 10 * g.algebra.field.p
    if cap < 1:
        raise ValueError("cap must be >= 1")
    e = identity_class(g.algebra)
    acc = g
    for n in range(1, cap + 1):
        if acc == e:
            return n
        acc = acc * g
    raise CapExceeded(f"order exceeds cap {cap}")


def generate_subgroup(gens, cap: int = None) -> list:
    """Closure under multiplication, breadth-first from the identity.

    Element order is BFS layer then discovery order; products are taken as
    (known element) * (generator) in the given generator order.  For a
    finite group, closure under multiplication alone suffices.
    """
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator (or an explicit identity) required")
    algebra = gens[0].algebra
    if cap is None:
        cap = 10 * algebra.field.p
    e = identity_class(algebra)
    seen = {e.key}
    elements = [e]
    frontier = [e]
    while frontier:
        new_layer = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h.key not in seen:
                    seen.add(h.key)
                    elements.append(h)
                    new_layer.append(h)
                    if len(elements) > cap:
                        raise CapExceeded(
                            f"subgroup generation exceeded cap {cap}; "
                            "expected order 3p"
                        )
        frontier = new_layer
    return elements


def cayley_table(elements) -> list:
    """Index-based multiplication table; errors if the list is not closed."""
    index = {g.key: i for i, g in enumerate(elements)}
    table = []
    for g in elements:
        row = []
        for h in elements:
            prod = g * h
            idx = index.get(prod.key)
            if idx is None:
                raise SbcertError("element list is not closed under multiplication")
            row.append(idx)
        table.append(row)
    return table


def table_identity(table) -> int:
    n = len(table)
    for e in range(n):
        if all(table[e][j] == j for j in range(n)) and all(
            table[j][e] == j for j in range(n)
        ):
            return e
    raise SbcertError("table has no two-sided identity")


def table_orders(table, e: int) -> list:
    orders = []
    for i in range(len(table)):
        x = i
        m = 1
        while x != e:
            x = table[x][i]
            m += 1
        orders.append(m)
    return orders


def order_histogram(table) -> dict:
    e = table_identity(table)
    hist = {}
    for m in table_orders(table, e):
        hist[m] = hist.get(m, 0) + 1
    return dict(sorted(hist.items()))


def is_abelian(table) -> bool:
    n = len(table)
    return all(table[i][j] == table[j][i] for i in range(n) for j in range(i + 1, n))


def xi_hat(algebra: CyclicAlgebra) -> ProjClass:
    return canonicalize(algebra.embed(algebra.field.xi()))


def alpha_hat(algebra: CyclicAlgebra) -> ProjClass:
    return canonicalize(algebra.alpha())


def verify_relations(algebra: CyclicAlgebra, strict: bool = False) -> dict:
    """The three defining relations of the target group, as class equalities.

    With strict=True the first failing relation raises RelationFailure;
    otherwise the returned booleans let a caller assemble a complete
    failure certificate.
    """
    p = algebra.field.p
    d = algebra.field.d
    e = identity_class(algebra)
    xi = xi_hat(algebra)
    al = alpha_hat(algebra)
    results = {
        "xi_power_p_trivial": xi**p == e,
        "alpha_cubed_trivial": al**3 == e,
        "commutation_twist": xi * al == al * xi**d,
    }
    if strict:
        for name, ok in results.items():
            if not ok:
                raise RelationFailure(f"relation {name} failed for p={p}, a={algebra.a}")
    return results


class AbstractGp:
    """The reference semidirect product Z/p x| Z/3 with twist d.

    Elements are pairs (u, v); multiplication is
    (u1, v1) * (u2, v2) = (u1 + d^v1 * u2 mod p, v1 + v2 mod 3).
    """

    __slots__ = ("p", "d", "elements", "_table")

    def __init__(self, p: int, d: int):
        if d % p in (0, 1) or pow(d, 3, p) != 1:
            raise ValueError(f"d = {d} does not have order 3 modulo {p}")
        self.p = p
        self.d = d
        self.elements = [(u, v) for u in range(p) for v in range(3)]
        self._table = None

    @property
    def order(self) -> int:
        return 3 * self.p

    def index(self, el) -> int:
        u, v = el
        return u * 3 + v

    def mul(self, g, h):
        u1, v1 = g
        u2, v2 = h
        return ((u1 + pow(self.d, v1, self.p) * u2) % self.p, (v1 + v2) % 3)

    def table(self) -> list:
        if self._table is None:
            idx = self.index
            self._table = [
                [idx(self.mul(g, h)) for h in self.elements] for g in self.elements
            ]
        return self._table

    def order_histogram(self) -> dict:
        return order_histogram(self.table())

    def verify_axioms(self) -> bool:
        """Identity, inverses, and associativity over the full table."""
        t = self.table()
        n = len(t)
        e = self.index((0, 0))
        if any(t[e][j] != j or t[j][e] != j for j in range(n)):
            return False
        for i in range(n):
            if e not in t[i]:
                return False
        for i in range(n):
            ti = t[i]
            for j in range(n):
                row_ij = t[ti[j]]
                tj = t[j]
                for l in range(n):
                    if row_ij[l] != ti[tj[l]]:
                        return False
        return True


def build_abstract(p: int, d: int) -> AbstractGp:
    return AbstractGp(p, d)


def check_isomorphism(
    concrete,
    abstract: AbstractGp,
    table: Optional[list] = None,
    strict: bool = False,
) -> dict:
    """Exhaustive bijective-homomorphism check of phi against both tables."""
    algebra = concrete[0].algebra
    n = abstract.order
    if len(concrete) != n:
        result = {
            "ok": False,
            "pairs_checked": 0,
            "counterexample": None,
            "convention": ISO_CONVENTION,
        }
        if strict:
            raise IsoFailure(f"group orders differ: {len(concrete)} vs {n}")
        return result
    if table is None:
        table = cayley_table(concrete)
    index = {g.key: i for i, g in enumerate(concrete)}
    e = identity_class(algebra)
    xi = xi_hat(algebra)
    al = alpha_hat(algebra)
    al2 = al * al
    xi_pows = [e]
    for _ in range(abstract.p - 1):
        xi_pows.append(xi_pows[-1] * xi)
    al2_pows = [e, al2, al2 * al2]
    phi = [None] * n
    for u, v in abstract.elements:
        img = xi_pows[u] * al2_pows[v]
        phi[abstract.index((u, v))] = index[img.key]
    if sorted(phi) != list(range(n)):
        result = {
            "ok": False,
            "pairs_checked": 0,
            "counterexample": None,
            "convention": ISO_CONVENTION,
        }
        if strict:
            raise IsoFailure("phi is not a bijection")
        return result
    atable = abstract.table()
    pairs = 0
    for gi in range(n):
        prow = table[phi[gi]]
        arow = atable[gi]
        for hi in range(n):
            pairs += 1
            if prow[phi[hi]] != phi[arow[hi]]:
                counterexample = (abstract.elements[gi], abstract.elements[hi])
                if strict:
                    raise IsoFailure(f"phi breaks at pair {counterexample}")
                return {
                    "ok": False,
                    "pairs_checked": pairs,
                    "counterexample": counterexample,
                    "convention": ISO_CONVENTION,
                }
    return {
        "ok": True,
        "pairs_checked": pairs,
        "counterexample": None,
        "convention": ISO_CONVENTION,
    }


def jordan_index_check(elements, table: Optional[list] = None) -> int:
    """Minimal index of a normal abelian subgroup, by full enumeration.

    For groups of order 3p (and the degenerate prime-order guard inputs)
    every proper nontrivial subgroup has prime order, hence is cyclic, so
    the trivial group, the cyclic closures of single elements, and the
    whole group exhaust all subgroups.
    """
    if table is None:
        table = cayley_table(elements)
    n = len(table)
    e = table_identity(table)
    inv = [row.index(e) for row in table]

    subgroups = {frozenset([e]), frozenset(range(n))}
    for i in range(n):
        closure = {e}
        x = i
        while x != e:
            closure.add(x)
            x = table[x][i]
        subgroups.add(frozenset(closure))

    best = None
    for sub in subgroups:
        abelian = all(
            table[s][t] == table[t][s] for s in sub for t in sub if s < t
        )
        if not abelian:
            continue
        normal = all(
            table[table[h][s]][inv[h]] in sub for h in range(n) for s in sub
        )
        if not normal:
            continue
        idx = n // len(sub)
        if best is None or idx < best:
            best = idx
    assert best is not None  # the trivial subgroup is always normal abelian
    return best


@dataclass
class GroupReport:
    """Everything the certificate records about the realized group."""

    order: int
    order_histogram: dict
    relations_ok: dict
    generator_orders: dict
    iso_ok: bool
    iso_pairs_checked: int
    iso_convention: str
    abstract_axioms_ok: bool
    histograms_match: bool
    jordan_index: int
    non_abelian: bool
    counterexample: Optional[tuple] = None

    @property
    def all_ok(self) -> bool:
        return (
            all(self.relations_ok.values())
            and self.iso_ok
            and self.abstract_axioms_ok
            and self.histograms_match
            and self.jordan_index == 3
            and self.non_abelian
        )


def group_report(algebra: CyclicAlgebra, cap: Optional[int] = None) -> GroupReport:
    """Generate the group, tabulate it, and run every structural check."""
    fieldp = algebra.field.p
    xi = xi_hat(algebra)
    al = alpha_hat(algebra)
    elements = generate_subgroup([xi, al], cap=cap)
    table = cayley_table(elements)
    hist = order_histogram(table)
    relations = verify_relations(algebra)
    gen_orders = {
        "xi_hat": element_order(xi),
        "alpha_hat": element_order(al),
    }
    abstract = build_abstract(fieldp, algebra.field.d)
    axioms_ok = abstract.verify_axioms()
    iso = check_isomorphism(elements, abstract, table=table)
    jordan = jordan_index_check(elements, table=table)
    return GroupReport(
        order=len(elements),
        order_histogram=hist,
        relations_ok=relations,
        generator_orders=gen_orders,
        iso_ok=iso["ok"],
        iso_pairs_checked=iso["pairs_checked"],
        iso_convention=iso["convention"],
        abstract_axioms_ok=axioms_ok,
        histograms_match=hist == abstract.order_histogram(),
        jordan_index=jordan,
        non_abelian=not is_abelian(table),
        counterexample=iso["counterexample"],
    )
