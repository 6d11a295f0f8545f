# cython: language_level=3
"""Interned-game kernel: the hot recursions behind every engine operation.

Positions live in a GameStore as append-only nodes addressed by integer id.
A node is a pair of id tuples (Left options, Right options), deduplicated
and sorted, so structurally identical game trees share a single id and tree
isomorphism checks reduce to id equality.  Option ids always point at
earlier nodes, which makes the option graph acyclic by construction.

Everything expensive is memoized against the owning store:

* ``leq`` drives the partial order and with it outcomes, domination and
  reversibility checks,
* ``canonical`` rewrites a node into the unique simplest equal-valued form
  by removing dominated options and bypassing reversible ones bottom-up,
* ``number_value`` decodes canonical shapes into exact dyadic rationals,
* ``left_stop`` / ``right_stop`` follow the optimal-stopping recursion for
  either the integer or the dyadic number system.

Dyadic rationals are plain ``(numerator, exponent)`` int pairs meaning
``numerator / 2**exponent``, normalized so the exponent is zero or the
numerator is odd.  Using bare tuples keeps this module self-contained and
cheap; the typed wrapper lives one layer up.

This file must stay importable both as plain Python and as the
Cython-compiled twin built by setup.py, so it uses nothing beyond the
package's error types.

Thread-safety contract: readers only traverse node tuples and insert memo
entries whose value is a pure function of the key, so concurrent reads are
safe and racing duplicate inserts are idempotent under CPython's atomic
dict operations.  Writers that intern new nodes must serialize themselves.
"""

from .errors import MalformedGameError

REL_LESS = 0
REL_GREATER = 1
REL_EQUAL = 2
REL_FUZZY = 3

OUT_LEFT = 0
OUT_RIGHT = 1
OUT_PREVIOUS = 2
OUT_NEXT = 3


def dy_normalize(num, exp):
    """Reduce num / 2**exp so exp == 0 or num is odd."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    if num == 0:
        return 0, 0
    while exp > 0 and num % 2 == 0:
        num //= 2
        exp -= 1
    return num, exp


def dy_lt(a, b):
    return a[0] << b[1] < b[0] << a[1]


def dy_leq(a, b):
    return a[0] << b[1] <= b[0] << a[1]


def dy_floor(a):
    return a[0] >> a[1]


def dy_ceil(a):
    return -((-a[0]) >> a[1])


def simplest_in_open_interval(a, b):
    """Simplest dyadic strictly between a and b (requires a < b).

    Simplest means fewest halvings first, then smallest magnitude, with the
    positive sign preferred on magnitude ties (only reachable for integers
    through the zero-in-range case).
    """
    lo = dy_floor(a) + 1
    hi = dy_ceil(b) - 1
    if lo <= hi:
        if lo <= 0 <= hi:
            return 0, 0
        return (lo, 0) if lo > 0 else (hi, 0)
    an, ae = a
    bn, be = b
    d = 1
    while True:
        n_lo = ((an << (d - ae)) if d >= ae else (an >> (ae - d))) + 1
        n_hi = ((bn << (d - be)) if d >= be else -((-bn) >> (be - d))) - 1
        if n_lo <= n_hi:
            # at the minimal depth the candidate is unique and odd
            return dy_normalize(n_lo, d)
        d += 1


class GameStore:
    """Append-only interner plus memo tables for one universe of positions."""

    __slots__ = (
        "_nodes",
        "_index",
        "_leq",
        "_canonical",
        "_birthday",
        "_number",
        "_left_stops",
        "_right_stops",
        "_numpos",
        "zero",
    )

    def __init__(self):
        self._nodes = []
        self._index = {}
        self._leq = {}
        self._canonical = {}
        self._birthday = {}
        self._number = {}
        self._left_stops = {}
        self._right_stops = {}
        self._numpos = {}
        self.zero = self.intern((), ())

    def __len__(self):
        return len(self._nodes)

    def intern(self, left, right):
        """Return the id for the position with these option sets."""
        key = (tuple(sorted(set(left))), tuple(sorted(set(right))))
        got = self._index.get(key)
        if got is not None:
            return got
        new_id = len(self._nodes)
        for side in key:
            for opt in side:
                if not 0 <= opt < new_id:
                    raise MalformedGameError(
                        "option %r is not a previously interned position" % (opt,)
                    )
        self._nodes.append(key)
        self._index[key] = new_id
        return new_id

    def node(self, g):
        return self._nodes[g]

    def left_options(self, g):
        return self._nodes[g][0]

    def right_options(self, g):
        return self._nodes[g][1]

    def leq(self, g, h):
        """Whether g <= h.

        Fails exactly when Left already has a move in g at least as good as
        all of h (some gL >= h) or Right has a move in h at most g (some
        hR <= g).
        """
        key = (g, h)
        memo = self._leq
        cached = memo.get(key)
        if cached is not None:
            return cached
        nodes = self._nodes
        result = True
        for gl in nodes[g][0]:
            if self.leq(h, gl):
                result = False
                break
        if result:
            for hr in nodes[h][1]:
                if self.leq(hr, g):
                    result = False
                    break
        memo[key] = result
        return result

    def compare(self, g, h):
        a = self.leq(g, h)
        b = self.leq(h, g)
        if a:
            return REL_EQUAL if b else REL_LESS
        return REL_GREATER if b else REL_FUZZY

    def outcome(self, g):
        rel = self.compare(g, self.zero)
        if rel == REL_GREATER:
            return OUT_LEFT
        if rel == REL_LESS:
            return OUT_RIGHT
        if rel == REL_EQUAL:
            return OUT_PREVIOUS
        return OUT_NEXT

    def birthday(self, g):
        memo = self._birthday
        got = memo.get(g)
        if got is not None:
            return got
        left, right = self._nodes[g]
        depth = 0
        for opt in left:
            d = self.birthday(opt) + 1
            if d > depth:
                depth = d
        for opt in right:
            d = self.birthday(opt) + 1
            if d > depth:
                depth = d
        memo[g] = depth
        return depth

    def _dominated_left(self, gl, options):
        # a Left option is dropped when another one is at least as good;
        # ties go to the smaller id so one member of each cluster survives
        for other in options:
            if other != gl and self.leq(gl, other):
                if not self.leq(other, gl) or other < gl:
                    return True
        return False

    def _dominated_right(self, gr, options):
        for other in options:
            if other != gr and self.leq(other, gr):
                if not self.leq(gr, other) or other < gr:
                    return True
        return False

    def remove_dominated(self, g):
        """Drop dominated options from both sides; value is unchanged."""
        left, right = self._nodes[g]
        kept_left = tuple(gl for gl in left if not self._dominated_left(gl, left))
        kept_right = tuple(gr for gr in right if not self._dominated_right(gr, right))
        if kept_left == left and kept_right == right:
            return g
        return self.intern(kept_left, kept_right)

    def bypass_reversible(self, g):
        """Replace reversible options until none remain; value is unchanged.

        A Left option gl reverses through any of its Right options glr with
        glr <= the current position; gl is then replaced by glr's Left
        options (possibly none).  Right options dually.  The comparison
        anchor is re-interned after every replacement because each rewrite
        changes the form while preserving the value.
        """
        left = list(self._nodes[g][0])
        right = list(self._nodes[g][1])
        while True:
            cur = self.intern(left, right)
            replaced = False
            for gl in left:
                for glr in self._nodes[gl][1]:
                    if self.leq(glr, cur):
                        rest = set(left)
                        rest.discard(gl)
                        rest.update(self._nodes[glr][0])
                        left = sorted(rest)
                        replaced = True
                        break
                if replaced:
                    break
            if replaced:
                continue
            for gr in right:
                for grl in self._nodes[gr][0]:
                    if self.leq(cur, grl):
                        rest = set(right)
                        rest.discard(gr)
                        rest.update(self._nodes[grl][1])
                        right = sorted(rest)
                        replaced = True
                        break
                if replaced:
                    break
            if not replaced:
                return cur

    def canonical(self, g):
        """The unique simplest position equal to g.

        Canonicalizes the options first, then alternates domination removal
        and reversibility bypass until both fix.  Every intermediate form
        has the same value as g, so all of them share the final answer in
        the memo table.
        """
        memo = self._canonical
        got = memo.get(g)
        if got is not None:
            return got
        left0, right0 = self._nodes[g]
        left = {self.canonical(x) for x in left0}
        right = {self.canonical(x) for x in right0}
        cur = self.intern(left, right)
        stages = [g]
        while True:
            got = memo.get(cur)
            if got is not None:
                result = got
                break
            stages.append(cur)
            nxt = self.remove_dominated(cur)
            if nxt == cur:
                nxt = self.bypass_reversible(cur)
            if nxt == cur:
                result = cur
                break
            cur = nxt
        for stage in stages:
            memo[stage] = result
        memo[result] = result
        return result

    def number_value(self, g):
        """The exact dyadic value of g, or None when g is not a number.

        Works by structural decode of the canonical form: the empty
        position, integer chains, and the two-sided dyadic shape whose
        value is the simplest rational between its options.
        """
        c = self.canonical(g)
        memo = self._number
        if c in memo:
            return memo[c]
        left, right = self._nodes[c]
        value = None
        if not left:
            if not right:
                value = (0, 0)
            elif len(right) == 1:
                b = self.number_value(right[0])
                if b is not None and b[1] == 0 and b[0] <= 0:
                    value = (b[0] - 1, 0)
        elif not right:
            if len(left) == 1:
                a = self.number_value(left[0])
                if a is not None and a[1] == 0 and a[0] >= 0:
                    value = (a[0] + 1, 0)
        elif len(left) == 1 and len(right) == 1:
            a = self.number_value(left[0])
            if a is not None:
                b = self.number_value(right[0])
                if b is not None and dy_lt(a, b):
                    value = simplest_in_open_interval(a, b)
        memo[c] = value
        return value

    def is_member(self, g, integer_system):
        """Whether g's value lies in the chosen number system."""
        v = self.number_value(g)
        if v is None:
            return False
        return not integer_system or v[1] == 0

    def left_stop(self, g, integer_system):
        """Best number Left can steer toward, within the given system.

        A member of the system is its own stop; otherwise the best Right
        stop among Left's options.
        """
        v = self.number_value(g)
        if v is not None and (not integer_system or v[1] == 0):
            return v
        key = (g, integer_system)
        memo = self._left_stops
        got = memo.get(key)
        if got is not None:
            return got
        left = self._nodes[g][0]
        if not left:
            raise MalformedGameError(
                "left stop undefined: position %d has no Left options and is "
                "not a member of the system" % g
            )
        best = None
        for gl in left:
            s = self.right_stop(gl, integer_system)
            if best is None or dy_lt(best, s):
                best = s
        memo[key] = best
        return best

    def right_stop(self, g, integer_system):
        v = self.number_value(g)
        if v is not None and (not integer_system or v[1] == 0):
            return v
        key = (g, integer_system)
        memo = self._right_stops
        got = memo.get(key)
        if got is not None:
            return got
        right = self._nodes[g][1]
        if not right:
            raise MalformedGameError(
                "right stop undefined: position %d has no Right options and "
                "is not a member of the system" % g
            )
        best = None
        for gr in right:
            s = self.left_stop(gr, integer_system)
            if best is None or dy_lt(s, best):
                best = s
        memo[key] = best
        return best

    def number_position(self, num, exp=0):
        """Interned canonical tree for the dyadic num / 2**exp."""
        num, exp = dy_normalize(num, exp)
        key = (num, exp)
        memo = self._numpos
        got = memo.get(key)
        if got is not None:
            return got
        if exp == 0:
            if num == 0:
                pos = self.zero
            elif num > 0:
                pos = self.intern((self.number_position(num - 1, 0),), ())
            else:
                pos = self.intern((), (self.number_position(num + 1, 0),))
        else:
            pos = self.intern(
                (self.number_position(num - 1, exp),),
                (self.number_position(num + 1, exp),),
            )
        memo[key] = pos
        self._canonical[pos] = pos
        self._number[pos] = (num, exp)
        return pos
