#!/usr/bin/env python3
"""Derive the fixed permutation fixtures shipped in core/src/corpus.cpp and
core/src/catalog.cpp.

  * PSL(2,16) generators l, t, u as permutations of the 17 points of the
    projective line over GF(16) (modulus x^4+x+1, theta = x). Points are row
    vectors acted on from the right; [1:y] is labelled by the bit pattern of
    y and [0:1] (the point fixed by t and u) is labelled 16.
  * A third automorphism of the Coxeter graph (a/b/c/d labelling) that,
    together with the rotation and the doubling map, generates the full
    automorphism group of order 336.

Run: python3 tools/scripts/derive_fixtures.py
"""
import itertools

import networkx as nx
from networkx.algorithms import isomorphism
from sympy.combinatorics import Permutation, PermutationGroup

MOD, K = 0b10011, 4
Q = 1 << K


def mul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & Q:
            a ^= MOD
    return r


def inv(a):
    for b in range(1, Q):
        if mul(a, b) == 1:
            return b
    raise ValueError(a)


def act(m, v):
    (m00, m01), (m10, m11) = m
    return (mul(v[0], m00) ^ mul(v[1], m10), mul(v[0], m01) ^ mul(v[1], m11))


def label(v):
    if v[0]:
        return mul(v[1], inv(v[0]))
    return Q


def point(i):
    return (1, i) if i < Q else (0, 1)


def perm_of(m):
    return [label(act(m, point(i))) for i in range(Q + 1)]


theta = 2
ell = ((0, 1), (1, 0))
t = ((theta, 0), (0, inv(theta)))
u = ((1, 1), (0, 1))
gens = [perm_of(m) for m in (ell, t, u)]
for name, g in zip("ltu", gens):
    print(f"psl2_16 {name}: {g}")
print("order", PermutationGroup([Permutation(g) for g in gens]).order())


def coxeter():
    g = nx.Graph()
    for i in range(7):
        g.add_edge(i, (i + 1) % 7)
        g.add_edge(7 + i, 7 + (i + 2) % 7)
        g.add_edge(14 + i, 14 + (i + 3) % 7)
        for base in (0, 7, 14):
            g.add_edge(21 + i, base + i)
    return g


cg = coxeter()
rot = [(v // 7) * 7 + (v % 7 + 1) % 7 for v in range(28)]
dbl = [0] * 28
for i in range(7):
    dbl[i] = 7 + (2 * i) % 7
    dbl[7 + i] = 14 + (2 * i) % 7
    dbl[14 + i] = (2 * i) % 7
    dbl[21 + i] = 21 + (2 * i) % 7
for iso in isomorphism.GraphMatcher(cg, cg).isomorphisms_iter():
    if iso[21] != 0:
        continue
    cand = [iso[v] for v in range(28)]
    grp = PermutationGroup([Permutation(rot), Permutation(dbl), Permutation(cand)])
    if grp.order() == 336:
        print("coxeter extra:", cand)
        break
