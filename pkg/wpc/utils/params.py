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

import math
import numbers
from dataclasses import dataclass
from enum import Enum


class WPCError(Exception): pass


class DomainError(WPCError, ValueError): pass


class UnsupportedDomain(WPCError): pass


class LawNotGranted(WPCError): pass


class IncompatibleVectors(WPCError, ValueError): pass


class UsageError(WPCError): pass


class NonConvergence(WPCError):
    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class OrthogonalityPreconditionError(WPCError):
    def __init__(self, message, violation):
        super().__init__(message)
        self.violation = violation


class Law(Enum):
    LWP = "lwp"
    UWP = "uwp"

    def flipped(self):
        return Law.UWP if self is Law.LWP else Law.LWP


class DualConvention(Enum):
    # C_{q,r'} ** (-p/q)
    PAPER = "paper"
    # C_{q,r'} ** (-r/r'), from the duality of the laws themselves
    DUALITY = "duality"


def conjugate(exponent):
    """
    conjugate returns the Hölder conjugate s/(s-1) of an exponent s > 1.
    :param exponent: The exponent s
    :return: s/(s-1)
    """
    return exponent / (exponent - 1.0)


def ensure_exponent(name, value):
    if isinstance(value, bool) or not isinstance(value, numbers.Real):
        raise DomainError("{} must be a real number, received {!r}".format(name, value))
    value = float(value)
    if not math.isfinite(value) or value <= 1.0:
        raise DomainError("{} must be finite and > 1, received {}".format(name, value))
    return value


def ensure_constant(C):
    C = float(C)
    if not (math.isfinite(C) and C > 0.0):
        raise DomainError("C must be finite and positive, received {}".format(C))
    return C


@dataclass(frozen=True)
class Params:
    """
    Params is the exponent pair (p, r): p is the Lebesgue exponent of the space and r the exponent of
    the weak parallelogram law. The conjugates q and r' are derived on access.
    """
    p: float
    r: float

    def __post_init__(self):
        object.__setattr__(self, "p", ensure_exponent("p", self.p))
        object.__setattr__(self, "r", ensure_exponent("r", self.r))

    @property
    def q(self):
        return conjugate(self.p)

    @property
    def r_prime(self):
        return conjugate(self.r)

    def in_minimized_range(self):
        """True when 1 < p <= 2 <= r <= q, where h is positive and C_{p,r} is the LWP constant."""
        return self.p <= 2.0 <= self.r <= self.q

    def dual(self):
        return Params(self.q, self.r_prime)
