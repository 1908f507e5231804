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
"""
Seeded random vectors for the verification suites.

Every chunk of SAMPLE_CHUNK samples draws from its own counter-based Philox stream keyed by
(seed, stream, dim, chunk). A sample prefix is therefore the same whatever the total count, and the
result does not depend on how many workers draw the chunks.
"""

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from wpc.utils.constants import PARETO_CAP, PARETO_INDEX, SAMPLE_CHUNK, ZERO_PROBABILITY

MAX_SEED = 2 ** 64 - 1


def chunk_generator(seed, stream, dim, chunk):
    """
    chunk_generator creates the generator for one chunk of samples.
    :param seed: 64-bit unsigned user seed
    :param stream: Stream identifier of the consumer
    :param dim: Dimension of the sampled vectors
    :param chunk: Chunk index
    :return: numpy Generator over a Philox bit generator
    """
    sequence = np.random.SeedSequence(int(seed), spawn_key=(int(stream), int(dim), int(chunk)))
    return np.random.Generator(np.random.Philox(sequence))


def draw_coordinates(rng, shape):
    """
    draw_coordinates draws i.i.d. coordinates: an exact zero with probability ZERO_PROBABILITY, otherwise
    with equal odds a standard normal, a two-sided Pareto capped at PARETO_CAP, or a +-1 atom.
    """
    zero = rng.random(shape) < ZERO_PROBABILITY
    component = rng.integers(0, 3, size=shape)
    normal = rng.standard_normal(shape)
    signs = rng.choice(np.array([-1.0, 1.0]), size=shape)
    pareto = signs * np.minimum(1.0 + rng.pareto(PARETO_INDEX, size=shape), PARETO_CAP)
    atoms = rng.choice(np.array([-1.0, 1.0]), size=shape)
    coords = np.select([component == 0, component == 1], [normal, pareto], atoms)
    coords[zero] = 0.0
    return coords


def _draw_chunk(seed, stream, dim, chunk):
    rng = chunk_generator(seed, stream, dim, chunk)
    return draw_coordinates(rng, (SAMPLE_CHUNK, 2, dim))


def sample_pairs(seed, stream, count, dim, workers=1):
    """
    sample_pairs draws count vector pairs of the given dimension.
    :param seed: 64-bit unsigned user seed
    :param stream: Stream identifier (see wpc.utils.constants)
    :param count: Number of pairs
    :param dim: Vector dimension
    :param workers: Threads used to draw chunks
    :return: Two numpy arrays of shape (count, dim)
    """
    if count <= 0:
        empty = np.empty((0, dim))
        return empty, empty.copy()
    chunks = range(math.ceil(count / SAMPLE_CHUNK))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            blocks = list(pool.map(lambda chunk: _draw_chunk(seed, stream, dim, chunk), chunks))
    else:
        blocks = [_draw_chunk(seed, stream, dim, chunk) for chunk in chunks]
    pairs = np.concatenate(blocks)[:count]
    return pairs[:, 0, :].copy(), pairs[:, 1, :].copy()
