from dataclasses import dataclass

from ..errors import ContractViolation, InvalidInput


@dataclass(frozen=True)
class BranchSplit:
    """
    The minimal BFS subtree over a same-level target set, split at its top
    branching vertex.

    ``anchor_depth`` is the distance from the targets' level up to ``top``;
    any path between a vertex of ``set_a`` and one of ``set_b`` closes through
    the tree with exactly 2 * anchor_depth extra edges.
    """

    subtree: frozenset
    set_a: frozenset
    set_b: frozenset
    anchor_depth: int
    top: int
    branches: tuple

    @property
    def branch_count(self):
        return len(self.branches)


def minimal_subtree_split(decomp, targets, branch=0):
    """
    Climb all targets towards the root in lockstep until they meet at one
    vertex; the targets' ancestors one step earlier name the branches.

    Args:
        decomp: LevelDecomposition holding the BFS tree
        targets: at least two vertices on a common level
        branch: which child branch becomes set_a (taken modulo the branch count)
    """
    targets = sorted(set(targets))
    if len(targets) < 2:
        raise InvalidInput("a branch split needs at least two targets")
    level = decomp.depth[targets[0]]
    if level < 0 or any(decomp.depth[t] != level for t in targets):
        raise InvalidInput("targets must be reachable and share one level")

    ancestor = {t: t for t in targets}
    edges = set()
    while True:
        above = {}
        for t, a in ancestor.items():
            parent = decomp.parents.get(a)
            if parent is None:
                raise ContractViolation(f"target {t} climbed past the root")
            above[t] = parent
        for a in set(ancestor.values()):
            edges.add((min(a, decomp.parents[a]), max(a, decomp.parents[a])))
        if len(set(above.values())) == 1:
            break
        ancestor = above
    top = next(iter(above.values()))

    groups = {}
    for t in targets:
        groups.setdefault(ancestor[t], []).append(t)
    branches = tuple(tuple(groups[child]) for child in sorted(groups))
    if len(branches) < 2:
        raise ContractViolation("targets did not branch below their common ancestor")
    chosen = branch % len(branches)
    set_a = frozenset(branches[chosen])
    return BranchSplit(
        subtree=frozenset(edges),
        set_a=set_a,
        set_b=frozenset(targets) - set_a,
        anchor_depth=level - decomp.depth[top],
        top=top,
        branches=branches,
    )
