"""Token games on multigraphs and their translation into positions.

Left and Right each own one token on a multigraph.  A move slides your own
token along an edge to the far endpoint, which must not hold the opponent's
token.  The variants differ in what the move destroys: the edge-removal
game deletes the traversed edge copy, the vertex-removal game deletes every
edge at the vertex the token just left (the vertex itself stays as an inert
label).  Under normal play the player without a move loses.

The module also houses the exhaustive small-board verifier: on bipartite
boards every position's value is an integer or a two-integer pair, tokens
on different color classes force an integer, and in the different-color
case any Left move and any Right move commute to the same state.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

from .engine import Engine
from .errors import BoundsTooLargeError, InvalidStateError
from .values import NumberSystem, ValueClass


class Variant(Enum):
    YASHIMA = "yashima"
    TRON = "tron"


class Player(Enum):
    LEFT = "left"
    RIGHT = "right"


class ColorClass(Enum):
    DIFFERENT_COLOR = "different-color"
    SAME_COLOR = "same-color"
    NOT_BIPARTITE = "not-bipartite"


@dataclass(frozen=True)
class MultiGraph:
    """Undirected multigraph on vertices 0..vertex_count-1.

    Edges are stored as a sorted tuple of (min, max) endpoint pairs; a pair
    appearing k times is an edge of multiplicity k.  Self-loops are
    rejected: a token can never move onto its own vertex.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise InvalidStateError("vertex_count must be nonnegative")
        canon = []
        for edge in self.edges:
            u, v = edge
            if u == v:
                raise InvalidStateError("self-loop at vertex %d" % u)
            if u > v:
                u, v = v, u
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise InvalidStateError("edge %r leaves the vertex range" % (edge,))
            canon.append((u, v))
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    def incident_pairs(self, v: int) -> tuple[tuple[int, int], ...]:
        """Distinct edge pairs touching v, each listed once."""
        seen = []
        for edge in self.edges:
            if v in edge and (not seen or seen[-1] != edge):
                seen.append(edge)
        return tuple(seen)

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self.edges.count((u, v))

    def without_edge_copy(self, edge: tuple[int, int]) -> "MultiGraph":
        """Remove one copy of the given edge."""
        idx = self.edges.index(edge)
        return MultiGraph(self.vertex_count, self.edges[:idx] + self.edges[idx + 1 :])

    def without_vertex_edges(self, v: int) -> "MultiGraph":
        """Remove every edge at v, keeping the vertex as an inert label."""
        return MultiGraph(
            self.vertex_count, tuple(e for e in self.edges if v not in e)
        )


@dataclass(frozen=True)
class YashimaState:
    """A board, the two token positions, and which variant is being played."""

    graph: MultiGraph
    left_token: int
    right_token: int
    variant: Variant = Variant.YASHIMA

    def __post_init__(self):
        n = self.graph.vertex_count
        if not (0 <= self.left_token < n and 0 <= self.right_token < n):
            raise InvalidStateError("token off the board")
        if self.left_token == self.right_token:
            raise InvalidStateError("tokens may not share a vertex")

    def key(self) -> tuple:
        """Transposition key: the variant, edges and tokens.

        The vertex count is deliberately absent so boards differing only in
        trailing isolated vertices share game values.
        """
        return (self.variant.value, self.graph.edges, self.left_token, self.right_token)


@dataclass(frozen=True)
class Move:
    """A move: slide along edge to destination (the far endpoint)."""

    edge: tuple[int, int]
    destination: int


def move_descriptors(state: YashimaState, player: Player) -> tuple[Move, ...]:
    token = state.left_token if player is Player.LEFT else state.right_token
    other = state.right_token if player is Player.LEFT else state.left_token
    moves = []
    for edge in state.graph.incident_pairs(token):
        dest = edge[1] if edge[0] == token else edge[0]
        if dest != other:
            moves.append(Move(edge, dest))
    return tuple(moves)


def is_legal(state: YashimaState, player: Player, move: Move) -> bool:
    token = state.left_token if player is Player.LEFT else state.right_token
    other = state.right_token if player is Player.LEFT else state.left_token
    if token not in move.edge or move.destination == other:
        return False
    if move.destination not in move.edge or move.destination == token:
        return False
    return state.graph.multiplicity(*move.edge) > 0


def apply_move(state: YashimaState, player: Player, move: Move) -> YashimaState:
    if not is_legal(state, player, move):
        raise InvalidStateError("move %r is not legal for %s" % (move, player.value))
    token = state.left_token if player is Player.LEFT else state.right_token
    if state.variant is Variant.YASHIMA:
        graph = state.graph.without_edge_copy(move.edge)
    else:
        graph = state.graph.without_vertex_edges(token)
    if player is Player.LEFT:
        return YashimaState(graph, move.destination, state.right_token, state.variant)
    return YashimaState(graph, state.left_token, move.destination, state.variant)


def legal_moves(state: YashimaState, player: Player) -> tuple[YashimaState, ...]:
    """Successor states for the player, deduplicated, in key order."""
    succs = {apply_move(state, player, m) for m in move_descriptors(state, player)}
    return tuple(sorted(succs, key=YashimaState.key))


def _bipartition(graph: MultiGraph) -> tuple[list, list] | None:
    """Per-vertex (component, color) labels, or None when not bipartite."""
    n = graph.vertex_count
    adjacency = [[] for _ in range(n)]
    for u, v in graph.edges:
        adjacency[u].append(v)
        adjacency[v].append(u)
    component = [-1] * n
    color = [0] * n
    for start in range(n):
        if component[start] >= 0:
            continue
        component[start] = start
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adjacency[u]:
                if component[v] < 0:
                    component[v] = start
                    color[v] = color[u] ^ 1
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
    return component, color


def color_class(state: YashimaState) -> ColorClass:
    """Token coloring: different components or opposite classes both count
    as different-color; any odd cycle anywhere makes the board unusable."""
    labels = _bipartition(state.graph)
    if labels is None:
        return ColorClass.NOT_BIPARTITE
    component, color = labels
    lt, rt = state.left_token, state.right_token
    if component[lt] != component[rt] or color[lt] != color[rt]:
        return ColorClass.DIFFERENT_COLOR
    return ColorClass.SAME_COLOR


@dataclass(frozen=True)
class SolveStats:
    """Search statistics for one starting state."""

    expanded_nodes: int
    memo_entries: int
    value: ValueClass


class YashimaSolver:
    """Translates states into interned positions, sharing transpositions."""

    def __init__(self, engine: Engine):
        self.engine = engine
        self._game_memo: dict = {}
        self._tree_memo: dict = {}

    def to_game(self, state: YashimaState) -> int:
        key = state.key()
        got = self._game_memo.get(key)
        if got is not None:
            return got
        left = {self.to_game(s) for s in legal_moves(state, Player.LEFT)}
        right = {self.to_game(s) for s in legal_moves(state, Player.RIGHT)}
        g = self.engine.intern(left, right)
        self._game_memo[key] = g
        return g

    def tree_size(self, state: YashimaState) -> int:
        """Nodes of the full game tree below the state (the state included).

        Each node branches into the deduplicated successor states of both
        players, so transpositions are counted once per occurrence in the
        tree but expanded only once here.
        """
        key = state.key()
        got = self._tree_memo.get(key)
        if got is not None:
            return got
        total = 1
        for s in legal_moves(state, Player.LEFT):
            total += self.tree_size(s)
        for s in legal_moves(state, Player.RIGHT):
            total += self.tree_size(s)
        self._tree_memo[key] = total
        return total

    def reachable_states(self, state: YashimaState) -> int:
        """Distinct states reachable from the state, itself included."""
        seen = set()
        stack = [state]
        seen.add(state.key())
        while stack:
            s = stack.pop()
            for player in (Player.LEFT, Player.RIGHT):
                for succ in legal_moves(s, player):
                    k = succ.key()
                    if k not in seen:
                        seen.add(k)
                        stack.append(succ)
        return len(seen)

    def solve_stats(self, state: YashimaState) -> SolveStats:
        game = self.to_game(state)
        return SolveStats(
            expanded_nodes=self.tree_size(state),
            memo_entries=self.reachable_states(state),
            value=self.engine.classify_value(game),
        )


def commuting_violation(state: YashimaState):
    """First (Left, Right) move pair that fails to commute, or None.

    A pair fails when one move stops being legal after the other, or when
    the two application orders land in different states.
    """
    lmoves = move_descriptors(state, Player.LEFT)
    rmoves = move_descriptors(state, Player.RIGHT)
    for ml in lmoves:
        after_l = apply_move(state, Player.LEFT, ml)
        for mr in rmoves:
            after_r = apply_move(state, Player.RIGHT, mr)
            if not is_legal(after_l, Player.RIGHT, mr):
                return ml, mr, "right move blocked after left"
            if not is_legal(after_r, Player.LEFT, ml):
                return ml, mr, "left move blocked after right"
            if apply_move(after_l, Player.RIGHT, mr) != apply_move(after_r, Player.LEFT, ml):
                return ml, mr, "orders disagree"
    return None


@dataclass(frozen=True)
class SimplicityCounterexample:
    state: YashimaState
    kind: str
    detail: str


@dataclass(frozen=True)
class SimplicityReport:
    ok: bool
    counterexamples: tuple[SimplicityCounterexample, ...]
    graphs_checked: int
    states_checked: int
    different_color_states: int
    commuting_pairs_checked: int


def _sweep_size(max_vertices: int, max_edges: int) -> int:
    total = 0
    for n in range(2, max_vertices + 1):
        pairs = n * (n - 1) // 2
        graphs = sum(
            _binomial(pairs + m - 1, m) for m in range(0, max_edges + 1)
        )
        total += graphs * n * (n - 1)
    return total


def _binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def verify_bipartite_simplicity(
    engine: Engine,
    max_vertices: int = 5,
    max_edges: int = 6,
    variant: Variant = Variant.YASHIMA,
    state_budget: int = 2_000_000,
    max_counterexamples: int = 1,
) -> SimplicityReport:
    """Check the bipartite value laws on every small board.

    Sweeps all labeled multigraphs with up to max_vertices vertices and
    max_edges edge copies, keeps the bipartite ones, and for every ordered
    token placement checks that the value equals some integer pair {m|n}
    (integers and half-odd-integers included, since m + 1/2 is {m|m+1}),
    that different-color tokens force an integer, and that different-color
    move pairs commute.  Successor states show up in the sweep as their own
    roots, so the laws are effectively checked on every follower too.
    """
    upper = _sweep_size(max_vertices, max_edges)
    if upper > state_budget:
        raise BoundsTooLargeError(
            "sweep of %d states exceeds the budget of %d" % (upper, state_budget)
        )
    solver = YashimaSolver(engine)
    seen = set()
    counterexamples = []
    graphs_checked = 0
    states_checked = 0
    different_color = 0
    commuting_pairs = 0
    zsys = NumberSystem.Z
    for n in range(2, max_vertices + 1):
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        for m in range(0, max_edges + 1):
            for combo in itertools.combinations_with_replacement(pairs, m):
                graph = MultiGraph(n, combo)
                if _bipartition(graph) is None:
                    continue
                graphs_checked += 1
                for lt in range(n):
                    for rt in range(n):
                        if lt == rt:
                            continue
                        state = YashimaState(graph, lt, rt, variant)
                        key = state.key()
                        if key in seen:
                            continue
                        seen.add(key)
                        states_checked += 1
                        game = solver.to_game(state)
                        value = engine.classify_value(game)
                        if not value.in_pair_set(zsys):
                            counterexamples.append(
                                SimplicityCounterexample(
                                    state, "value_not_simple", str(value)
                                )
                            )
                        if color_class(state) is ColorClass.DIFFERENT_COLOR:
                            different_color += 1
                            if engine.as_number(game, zsys) is None:
                                counterexamples.append(
                                    SimplicityCounterexample(
                                        state,
                                        "different_color_not_integer",
                                        str(value),
                                    )
                                )
                            bad = commuting_violation(state)
                            commuting_pairs += len(
                                move_descriptors(state, Player.LEFT)
                            ) * len(move_descriptors(state, Player.RIGHT))
                            if bad is not None:
                                counterexamples.append(
                                    SimplicityCounterexample(
                                        state, "non_commuting", "%r %r %s" % bad
                                    )
                                )
                        if len(counterexamples) >= max_counterexamples:
                            return SimplicityReport(
                                False,
                                tuple(counterexamples),
                                graphs_checked,
                                states_checked,
                                different_color,
                                commuting_pairs,
                            )
    return SimplicityReport(
        not counterexamples,
        tuple(counterexamples),
        graphs_checked,
        states_checked,
        different_color,
        commuting_pairs,
    )
