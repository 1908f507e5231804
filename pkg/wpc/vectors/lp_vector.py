# WP_Constants is a library of utilities for weak parallelogram laws in L^p
#
# MIT License
#
# Copyright (c) 2026 WP_Constants contributors
# Author: WP_Constants contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import numbers
from dataclasses import dataclass

import numpy as np

from wpc.utils.params import DomainError, IncompatibleVectors, ensure_exponent


def row_norms(coords, exponent):
    """
    row_norms computes the l^p norm along the last axis. Each row is scaled by its largest magnitude
    first so that large or tiny coordinates neither overflow nor underflow.
    :param coords: numpy array of shape (..., dim)
    :param exponent: The exponent p
    :return: numpy array of shape (...)
    """
    magnitudes = np.abs(np.asarray(coords, dtype=np.float64))
    largest = magnitudes.max(axis=-1)
    safe = np.where(largest > 0.0, largest, 1.0)
    scaled = magnitudes / safe[..., None]
    return largest * np.sum(scaled ** exponent, axis=-1) ** (1.0 / exponent)


@dataclass(frozen=True, eq=False)
class LpVector:
    """
    LpVector is an immutable finite real vector measured in the l^p norm.
    """
    exponent: float
    coords: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "exponent", ensure_exponent("exponent", self.exponent))
        coords = np.array(self.coords, dtype=np.float64)
        if coords.ndim != 1 or coords.size < 1:
            raise DomainError("coords must be a non-empty one dimensional sequence")
        if not np.all(np.isfinite(coords)):
            raise DomainError("coords must be finite")
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)

    @classmethod
    def basis(cls, exponent, dim, index):
        coords = np.zeros(dim)
        coords[index] = 1.0
        return cls(exponent, coords)

    @property
    def dim(self):
        return self.coords.size

    def norm(self):
        return p_norm(self)

    def is_zero(self):
        return not np.any(self.coords)

    def ensure_compatible(self, other):
        if not isinstance(other, LpVector):
            raise IncompatibleVectors("expected an LpVector, received {!r}".format(type(other)))
        if other.exponent != self.exponent:
            raise IncompatibleVectors("exponents differ: {} and {}".format(self.exponent, other.exponent))
        if other.dim != self.dim:
            raise IncompatibleVectors("dimensions differ: {} and {}".format(self.dim, other.dim))

    def __add__(self, other):
        self.ensure_compatible(other)
        return LpVector(self.exponent, self.coords + other.coords)

    def __sub__(self, other):
        self.ensure_compatible(other)
        return LpVector(self.exponent, self.coords - other.coords)

    def __neg__(self):
        return LpVector(self.exponent, -self.coords)

    def __mul__(self, scalar):
        if not isinstance(scalar, numbers.Real):
            return NotImplemented
        return LpVector(self.exponent, self.coords * float(scalar))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LpVector):
            return NotImplemented
        return self.exponent == other.exponent and np.array_equal(self.coords, other.coords)

    __hash__ = None

    def to_list(self):
        return [float(value) for value in self.coords]

    def __repr__(self):
        return "LpVector(exponent={!r}, coords={!r})".format(self.exponent, self.to_list())


def p_norm(x):
    """p_norm returns (sum |x_i|^p)^{1/p}."""
    return float(row_norms(x.coords, x.exponent))
