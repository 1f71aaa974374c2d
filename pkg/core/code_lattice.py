"""
码之间的包含关系图

节点是码（按给定顺序编号），边 u → v 表示 C_u ⊆ C_v。
相等的码互相可达，于是等价类就是强连通分量。
"""

from typing import List, Sequence

import networkx as nx

from .linear_code import LinearCode, contains_code


def inclusion_graph(codes: Sequence[LinearCode], labels: Sequence[str] = None) -> nx.DiGraph:
    """
    构建包含关系有向图

    Args:
        codes: 同一环、同一码长的码
        labels: 节点标签，默认 C0, C1, ...

    Returns:
        nx.DiGraph，节点属性 label / cardinality，边属性 label='contained in'
    """
    labels = list(labels) if labels is not None else [f"C{i}" for i in range(len(codes))]
    G = nx.DiGraph()
    for i, code in enumerate(codes):
        G.add_node(i, label=labels[i], cardinality=code.cardinality)

    for i, j in ((i, j) for i in range(len(codes)) for j in range(len(codes)) if i != j):
        # 基数更大的码不可能包含在更小的码里
        if codes[i].cardinality > codes[j].cardinality:
            continue
        if contains_code(codes[j], codes[i]):
            G.add_edge(i, j, label='contained in')
    return G


def is_ascending_chain(codes: Sequence[LinearCode]) -> bool:
    """C_0 ⊆ C_1 ⊆ ... ⊆ C_{k-1}"""
    if len(codes) < 2:
        return True
    G = inclusion_graph(codes)
    return all(G.has_edge(i, i + 1) for i in range(len(codes) - 1))


def is_descending_chain(codes: Sequence[LinearCode]) -> bool:
    """C_0 ⊇ C_1 ⊇ ... ⊇ C_{k-1}"""
    return is_ascending_chain(list(reversed(codes)))


def equality_classes(codes: Sequence[LinearCode]) -> List[List[int]]:
    """相等码的下标分组，组内升序，组按最小下标排序"""
    G = inclusion_graph(codes)
    classes = [sorted(component) for component in nx.strongly_connected_components(G)]
    return sorted(classes, key=lambda c: c[0])
