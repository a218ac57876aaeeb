from __future__ import annotations

from hairpin.scc import tarjan_scc


def test_components_in_reverse_topological_order():
	# 0 -> 1 <-> 2 -> 3
	components = tarjan_scc([[1], [2], [1, 3], []])
	assert [c.nodes for c in components] == [(3,), (1, 2), (0,)]
	assert [c.nontrivial for c in components] == [False, True, False]


def test_self_loop_is_nontrivial():
	(component,) = tarjan_scc([[0, 0]])
	assert component.nontrivial
	assert len(component) == 1


def test_every_node_in_one_component():
	successors = [[1, 2], [0], [3], [2, 4], []]
	components = tarjan_scc(successors)
	nodes = sorted(node for component in components for node in component)
	assert nodes == list(range(5))
	position = {node: i for i, component in enumerate(components) for node in component}
	for node, targets in enumerate(successors):
		for target in targets:
			assert position[target] <= position[node]


def test_deep_chain():
	size = 20_000
	successors = [[i + 1] for i in range(size - 1)] + [[0]]
	(component,) = tarjan_scc(successors)
	assert len(component) == size
