import json

import numpy as np
import pytest

from convsep.hilbert import HermitianOperator, TensorSpaceShape
from convsep.instances import random_decomposition, random_mappings
from convsep.separability import operator_from_mappings
from convsep.serialization import (
    decomposition_from_json,
    decomposition_to_json,
    group_from_json,
    group_to_json,
    mapping_from_json,
    mapping_to_json,
    operator_from_json,
    operator_to_json,
    vector_from_json,
    vector_to_json,
)
from convsep.abelian import make_group


def through_json(obj):
    """Force an actual text round trip, not just dict equality."""
    return json.loads(json.dumps(obj))


class TestGroup:
    def test_roundtrip(self):
        g = make_group([2, 3, 4])
        assert group_from_json(through_json(group_to_json(g))).moduli == (2, 3, 4)

    def test_shape(self):
        assert group_to_json(make_group([6])) == {"moduli": [6]}


class TestVector:
    def test_complex_pairs(self):
        v = np.array([1 + 2j, -0.5j])
        obj = vector_to_json(v)
        assert obj["entries"] == [[1.0, 2.0], [-0.0, -0.5]]

    def test_bit_exact_roundtrip(self):
        rng = np.random.default_rng(0)
        v = rng.uniform(-1, 1, 17) + 1j * rng.uniform(-1, 1, 17)
        back = vector_from_json(through_json(vector_to_json(v)))
        assert np.array_equal(back, v)

    def test_rejects_bad_pair(self):
        with pytest.raises(ValueError):
            vector_from_json({"entries": [[1.0, 2.0, 3.0]]})


class TestMapping:
    def test_bit_exact_roundtrip(self):
        m = random_mappings(4, [2, 3], (3,), primal_weight=1.25)[0]
        back = mapping_from_json(through_json(mapping_to_json(m)))
        assert back.group.moduli == m.group.moduli
        assert back.measure.primal_weight == m.measure.primal_weight
        assert np.array_equal(back.values, m.values)

    def test_default_weight(self):
        m = random_mappings(4, [2], (2,))[0]
        obj = mapping_to_json(m)
        del obj["primal_weight"]
        assert mapping_from_json(obj).measure.primal_weight == 1.0

    def test_rejects_shape_mismatch(self):
        m = random_mappings(4, [2], (2,))[0]
        obj = mapping_to_json(m)
        obj["values"] = obj["values"][:1]
        with pytest.raises(ValueError):
            mapping_from_json(obj)


class TestOperator:
    def test_bit_exact_roundtrip(self):
        op = operator_from_mappings(random_mappings(8, [2, 2], (2, 3)))
        back = operator_from_json(through_json(operator_to_json(op)))
        assert back.shape.dims == op.shape.dims
        assert np.array_equal(back.matrix, op.matrix)

    def test_shape(self):
        op = HermitianOperator(TensorSpaceShape((2, 2)), np.eye(4))
        obj = operator_to_json(op)
        assert obj["dims"] == [2, 2]
        assert obj["matrix"][0][0] == [1.0, 0.0]


class TestDecomposition:
    def test_bit_exact_roundtrip(self):
        d = random_decomposition(6, (2, 3), 5)
        back = decomposition_from_json(through_json(decomposition_to_json(d)))
        assert back.shape.dims == d.shape.dims
        assert len(back.terms) == len(d.terms)
        for (wa, fa), (wb, fb) in zip(back.terms, d.terms):
            assert wa == wb
            assert all(np.array_equal(x, y) for x, y in zip(fa, fb))

    def test_empty_terms(self):
        obj = {"dims": [2, 2], "terms": []}
        assert decomposition_from_json(obj).terms == ()
