from __future__ import annotations

import dataclasses
from collections.abc import Iterator, Sequence


__all__ = ["Component", "tarjan_scc"]


@dataclasses.dataclass(frozen=True)
class Component:
	"""
	Strongly connected component.

	Attributes:
		nodes: Members in increasing order.
		nontrivial: Whether an arc stays inside the component, i.e. it has at
			least two nodes or a single node with a self-loop.

	"""

	nodes: tuple[int, ...]
	nontrivial: bool

	def __len__(self) -> int:
		return len(self.nodes)

	def __iter__(self) -> Iterator[int]:
		return iter(self.nodes)


def tarjan_scc(successors: Sequence[Sequence[int]]) -> list[Component]:
	"""
	Partition the graph ``0..n-1`` into strongly connected components.

	``successors[v]`` lists the targets of the arcs leaving ``v``; duplicates
	are harmless. Components come out in reverse topological order: a
	component is emitted after every component it can reach.

	The traversal is iterative, so deep graphs don't hit the recursion limit.

	"""
	size = len(successors)
	index = [-1] * size
	lowlink = [0] * size
	on_stack = [False] * size
	stack: list[int] = []
	components: list[Component] = []
	counter = 0

	for root in range(size):
		if index[root] != -1:
			continue
		index[root] = lowlink[root] = counter
		counter += 1
		stack.append(root)
		on_stack[root] = True
		work = [(root, iter(successors[root]))]
		while work:
			node, targets = work[-1]
			for target in targets:
				if index[target] == -1:
					index[target] = lowlink[target] = counter
					counter += 1
					stack.append(target)
					on_stack[target] = True
					work.append((target, iter(successors[target])))
					break
				if on_stack[target]:
					lowlink[node] = min(lowlink[node], index[target])
			else:
				work.pop()
				if work:
					parent = work[-1][0]
					lowlink[parent] = min(lowlink[parent], lowlink[node])
				if lowlink[node] == index[node]:
					members = []
					while True:
						member = stack.pop()
						on_stack[member] = False
						members.append(member)
						if member == node:
							break
					nontrivial = len(members) > 1 or node in successors[node]
					components.append(Component(tuple(sorted(members)), nontrivial))
	return components
