#!/usr/bin/env python3
# Copyright 2026 The cgmeasure Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Builds the full 2 x 2^N system+apparatus state with explicit Kronecker
products, applies the three-bin coarse graining element by element over all
4^N basis pairs, and prints the quantities the tests pin. Exact rational
values come from fractions.Fraction.
"""
import itertools
import math
from fractions import Fraction

import numpy as np


def bin_of(l, n):
    if 3 * l >= 2 * n:
        return 0  # +1
    if 3 * l <= n:
        return 2  # -1
    return 1      # 0


def bin_count(n, b):
    return sum(math.comb(n, l) for l in range(n + 1) if bin_of(l, n) == b)


def zero_count(i, n):
    return n - bin(i).count("1")


def channel(op, n):
    out = np.zeros((3, 3), dtype=complex)
    dim = 1 << n
    counts = [bin_count(n, b) for b in range(3)]
    for i in range(dim):
        bi = bin_of(zero_count(i, n), n)
        for j in range(dim):
            bj = bin_of(zero_count(j, n), n)
            if i == j:
                out[bi, bi] += op[i, j]
            elif bi != bj:
                out[bi, bj] += op[i, j] / math.sqrt(counts[bi] * counts[bj])
    return out


def rot(a):
    return np.array([[math.cos(a / 2), -1j * math.sin(a / 2)],
                     [-1j * math.sin(a / 2), math.cos(a / 2)]])


def joint(n, theta, p, phi, c0, c1):
    psi = np.array([math.sqrt(p), math.sqrt(1 - p) * np.exp(1j * phi)])
    kets = []
    for s in (+1, -1):
        single = rot(s * theta) @ psi
        v = np.array([1.0 + 0j])
        for _ in range(n):
            v = np.kron(v, single)
        kets.append(v)
    amps = (c0, c1)
    out = np.zeros((6, 6), dtype=complex)
    for a in range(2):
        for b in range(2):
            blk = amps[a] * np.conj(amps[b]) * np.outer(kets[a], np.conj(kets[b]))
            out[3 * a:3 * a + 3, 3 * b:3 * b + 3] = channel(blk, n)
    return out


def negativity(rho):
    pt = rho.reshape(2, 3, 2, 3).transpose(2, 1, 0, 3).reshape(6, 6)
    ev = np.linalg.eigvalsh(pt)
    return float(np.sum(np.abs(ev)) - 1)


def main():
    np.set_printoptions(precision=17)
    print("pair counts (n^-2) for N<=12, pairs (-1,+1),(-1,0),(+1,0):")
    for n in range(1, 13):
        c = [bin_count(n, b) for b in range(3)]
        print(n, c, c[2] * c[0], c[2] * c[1], c[0] * c[1])

    print("Pr0 at theta=0,p=0.5:")
    for n in (6, 9, 33, 99):
        fr = Fraction(bin_count(n, 1), 2 ** n)
        print(n, fr if n < 20 else "", repr(float(fr)))

    c0 = 1 / math.sqrt(2)
    rho = joint(6, math.pi / 4, 0.5, math.pi / 2, c0, c0)
    print("joint N=6 theta=pi/4 p=0.5 phi=pi/2 c0=1/sqrt2 (re,im row-major):")
    for r in range(6):
        print(", ".join("{{{!r}, {!r}}}".format(float(rho[r, c].real), float(rho[r, c].imag)) for c in range(6)) + ",")
    print("negativity", repr(negativity(rho)))

    rho4 = joint(4, math.pi / 4, 0.5, math.pi / 2, c0, c0)
    print("negativity N=4 theta=pi/4:", repr(negativity(rho4)))

    for n in (4, 6, 12):
        for c0v in (1 / math.sqrt(2), 1 / math.sqrt(3)):
            c1v = math.sqrt(1 - c0v ** 2)
            vals = [negativity(joint(n, th, 0.5, math.pi / 2, c0v, c1v))
                    for th in (0.0, math.pi / 2, math.pi)] if n <= 6 else []
            c = [bin_count(n, b) for b in range(3)]
            print("N", n, "c0", c0v, "neg(0,pi/2,pi)", vals,
                  "closed 2|c0c1|n1 =", repr(2 * c0v * c1v / math.sqrt(c[0] * c[2])))


if __name__ == "__main__":
    main()
