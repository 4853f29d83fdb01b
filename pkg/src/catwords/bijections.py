"""Catalan words as Dyck words and as binary trees.

Dyck words are strings over ``u``/``d``.  A word's letters are the starting
heights of the up steps; its descents become ``ddu`` factors.  Under the
left-distance labelling (root 0, left child keeps the parent's label, right
child adds one) the inorder label sequence of a binary tree is a Catalan word,
and descents correspond to left children that have a right child.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core import Word


class InvalidDyckWord(ValueError):
    pass


def catalan_to_dyck(w: Sequence[int]) -> str:
    steps = []
    h = 0
    for letter in w:
        # growth rule keeps letter <= h, so the drop is never negative
        steps.append("d" * (h - letter))
        steps.append("u")
        h = letter + 1
    steps.append("d" * h)
    return "".join(steps)


def is_dyck(d: str) -> bool:
    h = 0
    for s in d.lower():
        if s == "u":
            h += 1
        elif s == "d":
            h -= 1
            if h < 0:
                return False
        else:
            return False
    return h == 0


def dyck_to_catalan(d: str) -> Word:
    d = d.replace(" ", "").lower()
    if not is_dyck(d):
        raise InvalidDyckWord(f"not a Dyck word: {d!r}")
    out = []
    h = 0
    for s in d:
        if s == "u":
            out.append(h)
            h += 1
        else:
            h -= 1
    return tuple(out)


def count_ddu(d: str) -> int:
    d = d.lower()
    return sum(1 for i in range(len(d) - 2) if d[i:i + 3] == "ddu")


@dataclass(frozen=True)
class Node:
    left: Optional["Node"] = None
    right: Optional["Node"] = None


BinaryTree = Optional[Node]


def catalan_to_tree(w: Sequence[int]) -> BinaryTree:
    return _build(tuple(w), 0)


def _build(w: Word, base: int) -> BinaryTree:
    if not w:
        return None
    # the root is the last letter equal to base: everything after it in
    # inorder lies in the right subtree and is labelled at least base + 1
    root = len(w) - 1 - w[::-1].index(base)
    return Node(_build(w[:root], base), _build(w[root + 1:], base + 1))


def _inorder(t: BinaryTree, label: int) -> Iterator[int]:
    if t is None:
        return
    yield from _inorder(t.left, label)
    yield label
    yield from _inorder(t.right, label + 1)


def tree_to_catalan(t: BinaryTree) -> Word:
    return tuple(_inorder(t, 0))


def node_count(t: BinaryTree) -> int:
    return 0 if t is None else 1 + node_count(t.left) + node_count(t.right)


def count_marked_nodes(t: BinaryTree) -> int:
    """Left children that have a right child."""
    if t is None:
        return 0
    here = 1 if t.left is not None and t.left.right is not None else 0
    return here + count_marked_nodes(t.left) + count_marked_nodes(t.right)


def tree_to_string(t: BinaryTree) -> str:
    """Bracket form ``(left right)`` per node, ``.`` for an empty subtree."""
    if t is None:
        return "."
    return f"({tree_to_string(t.left)} {tree_to_string(t.right)})"
