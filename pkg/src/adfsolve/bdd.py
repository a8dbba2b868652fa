"""Reduced ordered binary decision diagrams.

A manager owns a hash-consed node store over a fixed number of ordered
variables.  Nodes are plain integers; 0 and 1 are the terminal nodes for
the constant functions.  Because the store is hash-consed and every
constructor keeps diagrams reduced, two diagrams built in the same manager
represent the same Boolean function exactly when their root integers are
equal.

Besides the usual binary operators, quantification and model counting,
the manager provides the three set-optimization primitives the solver
needs: extracting a satisfying valuation with the fewest positive
literals, building an "exactly k of these functions hold" constraint,
and the monotone upward closure of a set under bitwise inclusion.

A manager and every diagram it owns belong to a single thread; distinct
managers are fully independent.
"""

from __future__ import annotations

import sys
from collections.abc import Iterable, Sequence


class BddError(Exception):
    """Invalid use of the diagram engine (mixed managers, bad supports)."""


# opcodes for the shared memo cache
_AND, _OR, _XOR, _IMP, _IFF, _NOT, _EXISTS, _FLIP, _RESTRICT = range(9)

_OPS = {"and": _AND, "or": _OR, "xor": _XOR, "imp": _IMP, "iff": _IFF}


class BddManager:
    """Shared node store for diagrams over ``num_vars`` ordered variables."""

    def __init__(self, num_vars: int):
        if num_vars < 0:
            raise BddError("variable count must be nonnegative")
        self.num_vars = num_vars
        # id -> (level, lo, hi); terminals carry the sentinel level num_vars
        # so that min() over levels always picks a decision node first.
        self._nodes: list[tuple[int, int, int]] = [
            (num_vars, 0, 0),
            (num_vars, 1, 1),
        ]
        self._unique: dict[tuple[int, int, int], int] = {}
        self._cache: dict[tuple, int] = {}
        self._sizes: dict[int, int] = {0: 1, 1: 1}
        # recursion depth tracks the variable order, never the node count
        limit = 4 * num_vars + 2000
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)

    # -- construction --------------------------------------------------

    @property
    def false(self) -> "Bdd":
        return Bdd(self, 0)

    @property
    def true(self) -> "Bdd":
        return Bdd(self, 1)

    def var(self, level: int) -> "Bdd":
        """The projection function of the variable at ``level``."""
        self._check_level(level)
        return Bdd(self, self._mk(level, 0, 1))

    def nvar(self, level: int) -> "Bdd":
        """The negated projection of the variable at ``level``."""
        self._check_level(level)
        return Bdd(self, self._mk(level, 1, 0))

    def _check_level(self, level: int) -> None:
        if not 0 <= level < self.num_vars:
            raise BddError(f"variable {level} outside manager range 0..{self.num_vars - 1}")

    def _mk(self, level: int, lo: int, hi: int) -> int:
        if lo == hi:
            return lo
        key = (level, lo, hi)
        found = self._unique.get(key)
        if found is None:
            self._nodes.append(key)
            found = len(self._nodes) - 1
            self._unique[key] = found
        return found

    # -- operators ------------------------------------------------------

    def apply(self, op: str, a: "Bdd", b: "Bdd") -> "Bdd":
        """Combine two diagrams with a binary connective.

        ``op`` is one of ``and``, ``or``, ``xor``, ``imp``, ``iff``.  Both
        operands must live in this manager.
        """
        code = _OPS.get(op)
        if code is None:
            raise BddError(f"unknown operator {op!r}")
        self._claim(a)
        self._claim(b)
        return Bdd(self, self._apply(code, a.root, b.root))

    def negate(self, a: "Bdd") -> "Bdd":
        self._claim(a)
        return Bdd(self, self._not(a.root))

    def _claim(self, f: "Bdd") -> None:
        if f.manager is not self:
            raise BddError("operands belong to different managers")

    def _apply(self, op: int, a: int, b: int) -> int:
        # terminal short-circuits keep the O(n^2) probing of the greedy
        # conjunction cheap once an operand collapses
        if op == _AND:
            if a == 0 or b == 0:
                return 0
            if a == 1:
                return b
            if b == 1:
                return a
            if a == b:
                return a
            if a > b:
                a, b = b, a
        elif op == _OR:
            if a == 1 or b == 1:
                return 1
            if a == 0:
                return b
            if b == 0:
                return a
            if a == b:
                return a
            if a > b:
                a, b = b, a
        elif op == _XOR:
            if a == b:
                return 0
            if a == 0:
                return b
            if b == 0:
                return a
            if a == 1:
                return self._not(b)
            if b == 1:
                return self._not(a)
            if a > b:
                a, b = b, a
        elif op == _IMP:
            if a == 0 or b == 1 or a == b:
                return 1
            if a == 1:
                return b
            if b == 0:
                return self._not(a)
        else:  # _IFF
            if a == b:
                return 1
            if a == 1:
                return b
            if b == 1:
                return a
            if a == 0:
                return self._not(b)
            if b == 0:
                return self._not(a)
            if a > b:
                a, b = b, a
        key = (op, a, b)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        nodes = self._nodes
        va, la, ha = nodes[a]
        vb, lb, hb = nodes[b]
        if va <= vb:
            v = va
            a0, a1 = la, ha
        else:
            v = vb
            a0 = a1 = a
        if vb <= va:
            b0, b1 = lb, hb
        else:
            b0 = b1 = b
        result = self._mk(v, self._apply(op, a0, b0), self._apply(op, a1, b1))
        self._cache[key] = result
        return result

    def _not(self, a: int) -> int:
        if a < 2:
            return 1 - a
        key = (_NOT, a)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        v, lo, hi = self._nodes[a]
        result = self._mk(v, self._not(lo), self._not(hi))
        self._cache[key] = result
        return result

    # -- quantification and substitution ---------------------------------

    def exists(self, f: "Bdd", variables: Iterable[int]) -> "Bdd":
        """Existentially quantify the given variable levels out of ``f``."""
        self._claim(f)
        levels = frozenset(variables)
        if not levels:
            return f
        return Bdd(self, self._exists(f.root, levels, max(levels)))

    def _exists(self, a: int, levels: frozenset[int], top: int) -> int:
        if a < 2:
            return a
        v, lo, hi = self._nodes[a]
        if v > top:
            return a
        key = (_EXISTS, a, levels)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        l = self._exists(lo, levels, top)
        h = self._exists(hi, levels, top)
        if v in levels:
            result = self._apply(_OR, l, h)
        else:
            result = self._mk(v, l, h)
        self._cache[key] = result
        return result

    def flip_var(self, f: "Bdd", level: int) -> "Bdd":
        """Substitute variable ``level`` with its own negation."""
        self._claim(f)
        self._check_level(level)
        return Bdd(self, self._flip(f.root, level))

    def _flip(self, a: int, level: int) -> int:
        if a < 2:
            return a
        v, lo, hi = self._nodes[a]
        if v > level:
            return a
        key = (_FLIP, a, level)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if v == level:
            result = self._mk(v, hi, lo)
        else:
            result = self._mk(v, self._flip(lo, level), self._flip(hi, level))
        self._cache[key] = result
        return result

    def _restrict(self, a: int, level: int, value: int) -> int:
        if a < 2:
            return a
        v, lo, hi = self._nodes[a]
        if v > level:
            return a
        if v == level:
            return hi if value else lo
        key = (_RESTRICT, a, level, value)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        result = self._mk(v, self._restrict(lo, level, value), self._restrict(hi, level, value))
        self._cache[key] = result
        return result

    # -- evaluation, counting, inspection --------------------------------

    def evaluate(self, f: "Bdd", valuation: Sequence[bool]) -> bool:
        """Follow the decision path selected by ``valuation``."""
        self._claim(f)
        if len(valuation) != self.num_vars:
            raise BddError("valuation length does not match manager variables")
        nodes = self._nodes
        u = f.root
        while u > 1:
            v, lo, hi = nodes[u]
            u = hi if valuation[v] else lo
        return u == 1

    def _reachable(self, root: int) -> list[int]:
        seen = {root}
        stack = [root]
        nodes = self._nodes
        while stack:
            u = stack.pop()
            if u < 2:
                continue
            _, lo, hi = nodes[u]
            if lo not in seen:
                seen.add(lo)
                stack.append(lo)
            if hi not in seen:
                seen.add(hi)
                stack.append(hi)
        # children are always created before parents, so ascending ids
        # give a bottom-up evaluation order
        return sorted(seen)

    def _size(self, root: int) -> int:
        found = self._sizes.get(root)
        if found is None:
            found = len(self._reachable(root))
            self._sizes[root] = found
        return found

    def size(self, f: "Bdd") -> int:
        """Number of nodes reachable from the root, terminals included."""
        self._claim(f)
        return self._size(f.root)

    def support(self, f: "Bdd") -> set[int]:
        """Set of variable levels the function depends on."""
        self._claim(f)
        nodes = self._nodes
        return {nodes[u][0] for u in self._reachable(f.root) if u > 1}

    def sat_count(self, f: "Bdd", over: Iterable[int]) -> int:
        """Exact number of satisfying assignments to the ``over`` variables.

        The count is an ordinary Python integer, so it stays exact far
        beyond 64 bits.  ``f`` must not depend on variables outside
        ``over``.
        """
        self._claim(f)
        levels = sorted(set(over))
        rank = {v: i for i, v in enumerate(levels)}
        m = len(levels)
        nodes = self._nodes
        reachable = self._reachable(f.root)
        for u in reachable:
            if u > 1 and nodes[u][0] not in rank:
                raise BddError(f"function depends on variable {nodes[u][0]} outside the counting set")
        counts: dict[int, int] = {0: 0, 1: 1}
        ranks: dict[int, int] = {0: m, 1: m}
        for u in reachable:
            if u < 2:
                continue
            v, lo, hi = nodes[u]
            r = rank[v]
            counts[u] = (counts[lo] << (ranks[lo] - r - 1)) + (counts[hi] << (ranks[hi] - r - 1))
            ranks[u] = r
        return counts[f.root] << ranks[f.root]

    def validate(self) -> None:
        """Check store invariants: reduced nodes, no duplicate triples."""
        seen: set[tuple[int, int, int]] = set()
        for u, (v, lo, hi) in enumerate(self._nodes):
            if u < 2:
                continue
            if lo == hi:
                raise BddError(f"node {u} has equal children")
            if not 0 <= v < self.num_vars:
                raise BddError(f"node {u} has invalid level {v}")
            if self._nodes[lo][0] <= v or self._nodes[hi][0] <= v:
                raise BddError(f"node {u} breaks the variable order")
            triple = (v, lo, hi)
            if triple in seen:
                raise BddError(f"duplicate node triple {triple}")
            seen.add(triple)

    # -- specialty operations --------------------------------------------

    def least_positive_valuation(self, f: "Bdd", over: Iterable[int]) -> list[bool] | None:
        """A satisfying valuation with the fewest variables set to true.

        Returns ``None`` when ``f`` is unsatisfiable.  Variables skipped by
        the extracted path (and everything outside ``over``) are set to
        false.  Single bottom-up pass over the nodes, so linear in the
        diagram size.
        """
        self._claim(f)
        if f.root == 0:
            return None
        nodes = self._nodes
        reachable = self._reachable(f.root)
        inf = float("inf")
        cost: dict[int, float] = {0: inf, 1: 0}
        for u in reachable:
            if u < 2:
                continue
            _, lo, hi = nodes[u]
            cost[u] = min(cost[lo], 1 + cost[hi])
        valuation = [False] * self.num_vars
        u = f.root
        while u > 1:
            v, lo, hi = nodes[u]
            if cost[lo] <= 1 + cost[hi]:
                u = lo
            else:
                valuation[v] = True
                u = hi
        return valuation

    def exact_count_constraint(self, indicators: Sequence["Bdd"], k: int) -> "Bdd":
        """Diagram satisfied when exactly ``k`` of the indicators hold.

        Built as a layered dynamic program from the last indicator to the
        first, with an absorbing overflow once more than ``k`` indicators
        are already satisfied.  When each indicator touches its own
        contiguous block of the variable order the result stays small
        (O(m*k) nodes for single literals).
        """
        if k < 0:
            raise BddError("count must be nonnegative")
        for f in indicators:
            self._claim(f)
        # layer[c] = constraint "exactly k - c of the remaining indicators hold"
        layer = [1 if c == k else 0 for c in range(k + 1)]
        for f in reversed(indicators):
            root = f.root
            nroot = self._not(root)
            nxt = []
            for c in range(k + 1):
                take = layer[c + 1] if c + 1 <= k else 0
                skip = layer[c]
                if take == skip:
                    nxt.append(take)
                else:
                    nxt.append(
                        self._apply(
                            _OR,
                            self._apply(_AND, root, take),
                            self._apply(_AND, nroot, skip),
                        )
                    )
            layer = nxt
        return Bdd(self, layer[0])

    def upward_closure(self, f: "Bdd", over: Iterable[int]) -> "Bdd":
        """Close the satisfying set of ``f`` upward under bitwise inclusion.

        The result accepts ``y`` whenever some satisfying ``x`` agrees with
        ``y`` outside ``over`` and has its true positions within ``over``
        contained in those of ``y``.  One cofactor-or-join per variable.
        """
        self._claim(f)
        g = f.root
        for v in sorted(set(over)):
            self._check_level(v)
            g = self._apply(_OR, g, self._apply(_AND, self._mk(v, 0, 1), self._restrict(g, v, 0)))
        return Bdd(self, g)

    def greedy_conjunction(self, clauses: Iterable["Bdd"]) -> "Bdd":
        """Conjoin many diagrams, smallest intermediate result first.

        Every round conjoins the pending clause whose product with the
        accumulator has the fewest nodes.  That costs O(n^2) apply calls,
        but the probing results are memoized and intermediate diagrams
        stay dramatically smaller than with a fixed fold order.
        """
        pending = []
        for c in clauses:
            self._claim(c)
            pending.append(c.root)
        acc = 1
        while pending:
            best_index = 0
            best_root = -1
            best_size = None
            for i, c in enumerate(pending):
                candidate = self._apply(_AND, acc, c)
                s = self._size(candidate)
                if best_size is None or s < best_size:
                    best_index, best_root, best_size = i, candidate, s
            acc = best_root
            pending.pop(best_index)
        return Bdd(self, acc)


class Bdd:
    """Handle to a function in a manager: the root id plus its owner.

    Handles compare equal exactly when they denote the same function in
    the same manager.  The usual operators are overloaded: ``&``, ``|``,
    ``^``, ``~``, plus :meth:`implies` and :meth:`iff`.
    """

    __slots__ = ("manager", "root")

    def __init__(self, manager: BddManager, root: int):
        self.manager = manager
        self.root = root

    def _binary(self, code: int, other: "Bdd") -> "Bdd":
        if other.manager is not self.manager:
            raise BddError("operands belong to different managers")
        return Bdd(self.manager, self.manager._apply(code, self.root, other.root))

    def __and__(self, other: "Bdd") -> "Bdd":
        return self._binary(_AND, other)

    def __or__(self, other: "Bdd") -> "Bdd":
        return self._binary(_OR, other)

    def __xor__(self, other: "Bdd") -> "Bdd":
        return self._binary(_XOR, other)

    def implies(self, other: "Bdd") -> "Bdd":
        return self._binary(_IMP, other)

    def iff(self, other: "Bdd") -> "Bdd":
        return self._binary(_IFF, other)

    def __invert__(self) -> "Bdd":
        return Bdd(self.manager, self.manager._not(self.root))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Bdd)
            and other.manager is self.manager
            and other.root == self.root
        )

    def __hash__(self) -> int:
        return hash((id(self.manager), self.root))

    @property
    def is_false(self) -> bool:
        return self.root == 0

    @property
    def is_true(self) -> bool:
        return self.root == 1

    def evaluate(self, valuation: Sequence[bool]) -> bool:
        return self.manager.evaluate(self, valuation)

    def exists(self, variables: Iterable[int]) -> "Bdd":
        return self.manager.exists(self, variables)

    def flip(self, level: int) -> "Bdd":
        return self.manager.flip_var(self, level)

    def sat_count(self, over: Iterable[int]) -> int:
        return self.manager.sat_count(self, over)

    def support(self) -> set[int]:
        return self.manager.support(self)

    def size(self) -> int:
        return self.manager.size(self)

    def __repr__(self) -> str:
        return f"Bdd(root={self.root}, size={self.size()})"
