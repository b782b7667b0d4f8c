#!/usr/bin/env python3
"""
Tests for the windowed bucket queue
"""

import numpy as np
import pytest

from bucketing import BucketQueue


def test_extracts_in_key_order_with_ties_grouped():
    queue = BucketQueue([3, 1, 3, 2, 1])
    assert queue.extract_min() == (1, [1, 4])
    assert queue.extract_min() == (2, [3])
    assert queue.extract_min() == (3, [0, 2])
    assert len(queue) == 0


def test_update_below_window_slides_down():
    queue = BucketQueue([5, 6, 7, 20], window=2)
    assert queue.extract_min() == (5, [0])
    queue.update(3, 1)
    assert queue.current_value == 1
    assert queue.extract_min() == (1, [3])
    assert queue.extract_min() == (6, [1])
    assert queue.extract_min() == (7, [2])


def test_overflow_is_pulled_in_when_window_empties():
    queue = BucketQueue([0, 50, 300, 301], window=4)
    assert queue.extract_min() == (0, [0])
    assert queue.extract_min() == (50, [1])
    assert queue.extract_min() == (300, [2])
    assert queue.extract_min() == (301, [3])


def test_update_moves_between_buckets():
    queue = BucketQueue([4, 4, 4])
    queue.update(1, 2)
    queue.update(2, 4)
    assert queue.value_of(1) == 2
    assert 1 in queue
    assert queue.extract_min() == (2, [1])
    assert 1 not in queue
    assert queue.extract_min() == (4, [0, 2])


def test_extract_from_empty_queue_raises():
    queue = BucketQueue([])
    with pytest.raises(IndexError):
        queue.extract_min()


def test_window_must_be_positive():
    with pytest.raises(ValueError):
        BucketQueue([1], window=0)


@pytest.mark.parametrize("window", [1, 3, 128])
def test_matches_dictionary_reference(window):
    """Random decrease-key workload against a plain dict"""
    rng = np.random.default_rng(window)
    keys = rng.integers(0, 400, size=60).tolist()
    queue = BucketQueue(keys, window=window)
    reference = dict(enumerate(keys))
    while reference:
        low = min(reference.values())
        expected = sorted(v for v, key in reference.items() if key == low)
        assert queue.extract_min() == (low, expected)
        for v in expected:
            del reference[v]
        for v in list(reference)[: len(reference) // 3]:
            new_key = max(0, reference[v] - int(rng.integers(0, 150)))
            reference[v] = new_key
            queue.update(v, new_key)
        assert len(queue) == len(reference)


def main():
    """Run all tests"""
    raise SystemExit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
