"""Poset weights, weight hierarchies, maximal flags, and the chain condition.

The weight of a subspace is computed from the supports of its basis rows:
the support union over all codewords equals the union over any basis
(every codeword's support sits inside the basis support union, and basis
rows are codewords), so the down-closure of the basis support union gives
the subspace weight without enumerating q**r codewords.  That identity is
exercised against a full-enumeration oracle in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BudgetExceeded,
    ChainConditionUnsatisfied,
    InputError,
    LengthMismatch,
    PreconditionViolated,
)
from .gf import GF, FiniteField
from .linalg import (
    DEFAULT_BUDGET,
    GeneratorFile,
    Matrix,
    Subspace,
    _rref_rows,
    enumerate_subspaces,
    is_subspace_of,
    read_generator_file,
    span,
)
from .poset import Poset


# -- supports and weights -----------------------------------------------------


def support_of_vector(x) -> frozenset[int]:
    """1-based index set of nonzero coordinates."""
    return frozenset(i + 1 for i, e in enumerate(x) if e)


def _support_mask(x) -> int:
    mask = 0
    for i, e in enumerate(x):
        if e:
            mask |= 1 << i
    return mask


def poset_weight(p: Poset, x) -> int:
    """Cardinality of the smallest ideal containing the support of x."""
    if len(x) != p.n:
        raise LengthMismatch(f"vector of length {len(x)} under a poset on {p.n} elements")
    return p.ideal_mask(_support_mask(x)).bit_count()


def poset_distance(p: Poset, field: FiniteField, x, y) -> int:
    """Metric induced by the poset weight: weight of x - y."""
    if len(x) != len(y):
        raise LengthMismatch(f"vectors of lengths {len(x)} and {len(y)}")
    diff = tuple(field.sub(a, b) for a, b in zip(x, y))
    return poset_weight(p, diff)


@dataclass(frozen=True)
class LinearCode:
    """A subspace of GF(q)^n analyzed under the metric of a bound poset."""

    poset: Poset
    subspace: Subspace

    def __post_init__(self):
        if self.poset.n != self.subspace.n:
            raise LengthMismatch(
                f"poset on {self.poset.n} elements, code of length {self.subspace.n}"
            )

    @property
    def n(self) -> int:
        return self.subspace.n

    @property
    def k(self) -> int:
        return self.subspace.dim

    @property
    def field(self) -> FiniteField:
        return self.subspace.field


def support_of_code(c: LinearCode) -> frozenset[int]:
    """Union of codeword supports; equals the union over the basis rows."""
    mask = 0
    for row in c.subspace.basis:
        mask |= _support_mask(row)
    return frozenset(i + 1 for i in range(c.n) if (mask >> i) & 1)


def generalized_weight(p: Poset, d: Subspace) -> int:
    """Size of the union of ideals generated by the supports of all vectors of d."""
    if d.n != p.n:
        raise LengthMismatch(f"subspace of length {d.n} under a poset on {p.n} elements")
    mask = 0
    for row in d.basis:
        mask |= _support_mask(row)
    return p.ideal_mask(mask).bit_count()


# -- weight hierarchy ------------------------------------------------------------


def hierarchy_within_bounds(n: int, k: int, values) -> bool:
    """Monotonicity and the generalized Singleton bound: strictly increasing
    with r <= d_r <= n - k + r for every r."""
    values = tuple(values)
    if len(values) != k:
        return False
    if any(values[i] >= values[i + 1] for i in range(k - 1)):
        return False
    return all(r <= d <= n - k + r for r, d in enumerate(values, 1))


def weight_hierarchy(c: LinearCode, budget: int | None = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Exact minimum subspace weight for every dimension 1..k, by exhaustive
    enumeration of the r-dimensional subcodes."""
    values = []
    for r in range(1, c.k + 1):
        try:
            subs = enumerate_subspaces(c.subspace, r, budget)
        except BudgetExceeded as exc:
            raise BudgetExceeded(
                f"hierarchy dimension {r}: {exc}", count=exc.count, budget=exc.budget, r=r
            ) from None
        values.append(min(generalized_weight(c.poset, d) for d in subs))
    hier = tuple(values)
    if not hierarchy_within_bounds(c.n, c.k, hier):
        raise AssertionError(f"computed hierarchy {hier} violates its invariants")
    return hier


# -- maximal flags and the chain condition ------------------------------------------


@dataclass(frozen=True)
class Flag:
    """Nested subspaces D_1 < .. < D_k achieving the weight hierarchy."""

    subspaces: tuple[Subspace, ...]
    weights: tuple[int, ...]


def _achiever_levels(c, hier, budget):
    levels = []
    for r in range(1, c.k + 1):
        levels.append(
            tuple(
                d
                for d in enumerate_subspaces(c.subspace, r, budget)
                if generalized_weight(c.poset, d) == hier[r - 1]
            )
        )
    return levels


def _search_flags(c, budget, first_only):
    """Depth-first search over hierarchy achievers with nesting constraints,
    in the deterministic subspace enumeration order."""
    hier = weight_hierarchy(c, budget)
    if c.k == 0:
        return [Flag((), ())]
    levels = _achiever_levels(c, hier, budget)
    found = []
    stack = []

    def walk(level):
        for d in levels[level]:
            if stack and not is_subspace_of(stack[-1], d):
                continue
            stack.append(d)
            if level == c.k - 1:
                found.append(Flag(tuple(stack), hier))
                if first_only:
                    stack.pop()
                    return True
            elif walk(level + 1):
                stack.pop()
                return True
            stack.pop()
        return False

    walk(0)
    return found


def _greedy_flag(c):
    """Flag construction for codes whose support is totally ordered.

    Re-reduce the basis with columns prioritized by descending poset order
    of the support: each resulting row has a distinct top element, the row
    with the j-th smallest top achieves the j-th minimum weight, and the
    spans of the j smallest-top rows are automatically nested.
    """
    p = c.poset
    supp = sorted(
        support_of_code(c), key=lambda e: p.ideal_mask(1 << (e - 1)).bit_count()
    )
    order = [e - 1 for e in reversed(supp)]
    order += [j for j in range(c.n) if j + 1 not in set(supp)]
    rows, _ = _rref_rows(c.field, c.subspace.basis, c.n, column_order=order)
    ascending = rows[::-1]
    subspaces = []
    weights = []
    for j in range(1, c.k + 1):
        subspaces.append(span(c.field, c.n, ascending[:j]))
        weights.append(poset_weight(p, ascending[j - 1]))
    return Flag(tuple(subspaces), tuple(weights))


def find_maximal_flag(
    c: LinearCode, method: str = "auto", budget: int | None = DEFAULT_BUDGET
) -> Flag | None:
    """A maximal flag achieving the hierarchy, or None when none exists.

    ``method``: "dfs" searches achievers exhaustively; "greedy" uses the
    direct construction available when the code support is totally ordered;
    "auto" picks greedy when it applies.  Both paths return the same flag
    whenever greedy applies (the flag is then unique).
    """
    if method not in ("auto", "greedy", "dfs"):
        raise InputError(f"unknown method {method!r}")
    if c.k == 0:
        return Flag((), ())
    total = c.poset.is_total_on(support_of_code(c))
    if method == "greedy" and not total:
        raise PreconditionViolated("greedy construction requires a totally ordered support")
    if method == "auto":
        method = "greedy" if total else "dfs"
    if method == "greedy":
        return _greedy_flag(c)
    flags = _search_flags(c, budget, first_only=True)
    return flags[0] if flags else None


def enumerate_maximal_flags(c: LinearCode, budget: int | None = DEFAULT_BUDGET) -> list[Flag]:
    """Every maximal flag achieving the hierarchy (empty when the chain
    condition fails)."""
    return _search_flags(c, budget, first_only=False)


def is_flag_unique(c: LinearCode, budget: int | None = DEFAULT_BUDGET) -> bool:
    """True iff exactly one maximal flag achieves the hierarchy.

    Witnesses are available from ``enumerate_maximal_flags``.  Raises
    ``ChainConditionUnsatisfied`` when no flag exists at all.
    """
    flags = enumerate_maximal_flags(c, budget)
    if not flags:
        raise ChainConditionUnsatisfied("no maximal flag achieves the hierarchy")
    return len(flags) == 1


def verify_achiever_nesting(
    c: LinearCode, candidates, budget: int | None = DEFAULT_BUDGET
) -> bool:
    """For a totally ordered support, any family of hierarchy-achieving
    subspaces of dimensions 1..k must be nested; this checks that claim
    instead of assuming it."""
    if not c.poset.is_total_on(support_of_code(c)):
        raise PreconditionViolated("code support must be totally ordered")
    cands = tuple(candidates)
    if len(cands) != c.k:
        raise PreconditionViolated(f"expected {c.k} candidates, got {len(cands)}")
    hier = weight_hierarchy(c, budget)
    for r, d in enumerate(cands, 1):
        if d.dim != r:
            raise PreconditionViolated(f"candidate {r} has dimension {d.dim}")
        if not is_subspace_of(d, c.subspace):
            raise PreconditionViolated(f"candidate {r} is not a subcode")
        if generalized_weight(c.poset, d) != hier[r - 1]:
            raise PreconditionViolated(
                f"candidate {r} has weight {generalized_weight(c.poset, d)}, "
                f"hierarchy says {hier[r - 1]}"
            )
    return all(is_subspace_of(cands[i], cands[i + 1]) for i in range(c.k - 1))


# -- matrix codes -----------------------------------------------------------------


def rt_weight(a: Matrix) -> int:
    """Column-wise weight for matrix spaces over a union of chains: the sum
    over columns of the highest nonzero row index (zero columns contribute 0)."""
    total = 0
    for j in range(a.ncols):
        top = 0
        for i in range(a.nrows):
            if a.rows[i][j]:
                top = i + 1
        total += top
    return total


def flatten_matrix(a: Matrix, order: str = "row") -> tuple[int, ...]:
    """Matrix-to-vector reading: "row" concatenates rows, "col" concatenates
    columns (pairing column j with chain j of a disjoint-chains poset)."""
    if order == "row":
        return tuple(e for row in a.rows for e in row)
    if order == "col":
        return tuple(a.rows[i][j] for j in range(a.ncols) for i in range(a.nrows))
    raise InputError(f"unknown flattening order {order!r}")


# -- code description files ----------------------------------------------------------


def vectors_from_generator_file(
    gfile: GeneratorFile, flatten: str = "row", chain_shape: tuple[int, int] | None = None
) -> list[tuple[int, ...]]:
    """Assemble the k generators of a parsed file into length-n vectors.

    "row": the body is a stream of k*n tokens, consumed in reading order.
    "col": each generator is a block of chain_shape[0] lines with
    chain_shape[1] tokens, read column-major so column j lands on chain j.
    """
    if flatten == "row":
        tokens = [e for line in gfile.lines for e in line]
        if len(tokens) != gfile.k * gfile.n:
            raise InputError(
                f"expected {gfile.k * gfile.n} entries for {gfile.k} generators "
                f"of length {gfile.n}, found {len(tokens)}"
            )
        return [
            tuple(tokens[g * gfile.n : (g + 1) * gfile.n]) for g in range(gfile.k)
        ]
    if flatten != "col":
        raise InputError(f"unknown flattening order {flatten!r}")
    if chain_shape is None:
        raise InputError("column-major flattening requires the chain shape (length, count)")
    rows, cols = chain_shape
    if rows * cols != gfile.n:
        raise InputError(f"chain shape {rows}x{cols} does not match length {gfile.n}")
    if len(gfile.lines) != gfile.k * rows:
        raise InputError(
            f"column-major layout needs {gfile.k * rows} lines "
            f"({gfile.k} generators of {rows} rows), found {len(gfile.lines)}"
        )
    out = []
    for g in range(gfile.k):
        block = gfile.lines[g * rows : (g + 1) * rows]
        if any(len(line) != cols for line in block):
            raise InputError(f"generator {g + 1}: every line must have {cols} entries")
        out.append(tuple(block[i][j] for j in range(cols) for i in range(rows)))
    return out


def load_code(
    path,
    poset: Poset,
    flatten: str = "row",
    chain_shape: tuple[int, int] | None = None,
) -> LinearCode:
    """Read a generator-matrix file and bind it to the poset."""
    gfile = read_generator_file(path)
    if gfile.n != poset.n:
        raise LengthMismatch(
            f"{path}: code length {gfile.n} does not match poset size {poset.n}"
        )
    field = GF(gfile.q)
    vectors = vectors_from_generator_file(gfile, flatten, chain_shape)
    return LinearCode(poset, span(field, gfile.n, vectors))
