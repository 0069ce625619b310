"""Validation, construction, and serialization of near-ring tables."""
import json

import pytest

from nearrings import (
    AxiomViolation,
    CapExceeded,
    TableFormatError,
    build_M0,
    build_extension,
    build_product,
    builtin,
    emit_table,
    from_document,
    parse_table,
    to_document,
    validate_group,
    validate_nearring,
)
from nearrings.catalog import _KLEIN4_ADD, _KLEIN4_MUL, _f2_module, _zn_group


def klein4():
    return builtin("klein4_ring")


class TestValidateGroup:
    def test_trivial_group(self):
        g = validate_group([[0]])
        assert g.order == 1 and g.neg == (0,)

    def test_klein4(self):
        g = validate_group(_KLEIN4_ADD, labels=("0", "a", "b", "c"))
        assert g.order == 4
        assert g.neg == (0, 1, 2, 3)  # every element is its own inverse
        assert g.sub(1, 2) == 3
        assert g.label(3) == "c"

    def test_identity_must_sit_at_zero(self):
        # Z2 with the identity at index 1.
        with pytest.raises(AxiomViolation) as exc:
            validate_group([[1, 0], [0, 1]])
        assert exc.value.law == "add_identity"

    def test_assoc_failure_carries_witness(self):
        add = [row[:] for row in _KLEIN4_ADD]
        add[1][2] = 1  # break a + b
        with pytest.raises(AxiomViolation) as exc:
            validate_group(add)
        law, w = exc.value.law, exc.value.witness
        assert law in ("add_assoc", "add_inverse")
        if law == "add_assoc":
            i, j, k = w
            assert add[add[i][j]][k] != add[i][add[j][k]]

    def test_bad_shape(self):
        with pytest.raises(TableFormatError):
            validate_group([[0, 1], [1, 0], [0, 1]])

    def test_out_of_range_entry(self):
        with pytest.raises(TableFormatError):
            validate_group([[0, 1], [1, 7]])

    def test_duplicate_labels(self):
        with pytest.raises(TableFormatError):
            validate_group([[0, 1], [1, 0]], labels=("x", "x"))


class TestValidateNearring:
    def test_klein4_flags(self):
        ring = klein4()
        f = ring.flags
        assert f.right_distributive and f.left_distributive
        assert f.abelian_add and f.zero_symmetric
        assert f.unital and f.commutative_mul
        assert ring.one == 2
        assert ring.is_ring()
        assert ring.flag_witnesses == ()

    def test_zero_annihilates_on_the_left(self):
        for name in ("klein4_ring", "m0_z3", "ext_f2_f2"):
            ring = builtin(name)
            assert all(ring.mul[0][x] == 0 for x in range(ring.order))

    def test_mul_assoc_failure(self):
        mul = [row[:] for row in _KLEIN4_MUL]
        mul[1][1] = 2
        with pytest.raises(AxiomViolation) as exc:
            validate_nearring(_KLEIN4_ADD, mul)
        assert exc.value.law in ("mul_assoc", "right_dist")

    def test_right_dist_failure_witness_reevaluates(self):
        # Constant-one column breaks (x+y)*z = x*z + y*z on Z2.
        add = [[0, 1], [1, 0]]
        mul = [[0, 1], [0, 1]]
        with pytest.raises(AxiomViolation) as exc:
            validate_nearring(add, mul)
        assert exc.value.law == "right_dist"
        i, j, k = exc.value.witness
        assert mul[add[i][j]][k] != add[mul[i][k]][mul[j][k]]

    def test_declared_unity_checked(self):
        with pytest.raises(AxiomViolation) as exc:
            validate_nearring(_KLEIN4_ADD, _KLEIN4_MUL, one=0)
        assert exc.value.law == "unity"

    def test_unity_found_when_not_declared(self):
        ring = validate_nearring(_KLEIN4_ADD, _KLEIN4_MUL)
        assert ring.one == 2

    def test_flag_witnesses_reevaluate(self):
        ring = builtin("m0_z3")
        wd = dict(ring.flag_witnesses)
        i, j, k = wd["left_distributive"]
        assert ring.mul[i][ring.add[j][k]] != ring.add[ring.mul[i][j]][ring.mul[i][k]]
        assert "zero_symmetric" not in wd  # m0_z3 is zero-symmetric

    def test_nonzero_symmetric_witness(self):
        ring = builtin("ext_f2_f2")
        wd = dict(ring.flag_witnesses)
        (x,) = wd["zero_symmetric"]
        assert ring.mul[x][0] != 0


class TestBuildM0:
    def test_z3_order_and_identity(self):
        ring = build_M0(_zn_group(3))
        assert ring.order == 9
        assert ring.one == 5  # the identity map sits at index 5
        assert all(ring.mul[i][ring.one] == i == ring.mul[ring.one][i]
                   for i in range(9))

    def test_composition_matches_function_composition(self):
        ring = build_M0(_zn_group(3))

        def vec(i):
            return (0, i // 3, i % 3)

        for i in range(9):
            for j in range(9):
                composed = tuple(vec(i)[vec(j)[x]] for x in range(3))
                assert vec(ring.mul[i][j]) == composed

    def test_not_left_distributive(self):
        ring = build_M0(_zn_group(3))
        assert not ring.flags.left_distributive
        assert ring.flags.zero_symmetric

    def test_cap(self):
        with pytest.raises(CapExceeded):
            build_M0(_zn_group(5), cap=100)


class TestBuildProduct:
    def test_single_factor_is_identity(self):
        ring = build_product([klein4()])
        assert ring.add == klein4().add and ring.mul == klein4().mul

    def test_componentwise(self):
        k, z = klein4(), builtin("zn_ring(2)")
        ring = build_product([k, z])
        assert ring.order == 8
        # row-major: index = 2 * (klein component) + (z2 component)
        for x in range(8):
            for y in range(8):
                x1, x2 = divmod(x, 2)
                y1, y2 = divmod(y, 2)
                assert ring.add[x][y] == 2 * k.add[x1][y1] + z.add[x2][y2]
                assert ring.mul[x][y] == 2 * k.mul[x1][y1] + z.mul[x2][y2]
        assert ring.one == 2 * k.one + z.one
        assert ring.factors == (k, z)

    def test_annihilators_multiply(self):
        from nearrings import annihilator
        k, z = klein4(), builtin("zn_ring(2)")
        ring = build_product([k, z])
        for x in range(8):
            x1, x2 = divmod(x, 2)
            expect = frozenset(2 * a + b
                               for a in annihilator(k, "left", {x1})
                               for b in annihilator(z, "left", {x2}))
            assert annihilator(ring, "left", {x}) == expect

    def test_cap(self):
        with pytest.raises(CapExceeded):
            build_product([builtin("zn_ring(64)")] * 3)


class TestBuildExtension:
    def test_multiplication_rule(self):
        ring = builtin("ext_f2_f2")
        # <1,1> * <0,0> = <1*0, 1*0 + 1> = <0,1>; index = 2a + m
        assert ring.mul[3][0] == 1
        assert ring.one == 2  # <1,0>
        assert not ring.flags.zero_symmetric
        assert ring.extension is not None

    def test_unit_family_inverts(self):
        # <u, -um> * <u^-1, m> = <1, 0> for every unit u and every m.
        from nearrings.classify import units
        ring = builtin("ext_mat2f2_f2sq")
        base, module = ring.extension
        base_units, base_inv = units(base)
        mneg = module.carrier.neg
        act = module.action
        m_n = module.carrier.order
        for u in sorted(base_units):
            for m in range(m_n):
                left = u * m_n + mneg[act[u][m]]
                right = base_inv[u] * m_n + m
                assert ring.mul[left][right] == ring.one

    def test_rejects_non_ring_base(self):
        with pytest.raises(ValueError):
            build_extension(builtin("m0_z3"), _f2_module())


class TestSerialization:
    def test_roundtrip_all_builtins(self):
        for name in ("klein4_ring", "zn_ring(5)", "m0_z3", "mat2_f2",
                     "ext_f2_f2", "klein4_x_f2"):
            ring = builtin(name)
            back = from_document(parse_table(emit_table(ring)))
            assert back.add == ring.add
            assert back.mul == ring.mul
            assert back.one == ring.one
            assert back.flags == ring.flags
            assert back.group.labels == ring.group.labels

    def test_emission_is_deterministic(self):
        assert emit_table(klein4()) == emit_table(builtin("klein4_ring"))
        assert emit_table(klein4()).endswith("\n")

    def test_missing_field(self):
        doc = to_document(klein4())
        del doc["mul"]
        with pytest.raises(TableFormatError, match="mul"):
            parse_table(json.dumps(doc))

    def test_wrong_format_tag(self):
        doc = to_document(klein4())
        doc["format"] = "something-else"
        with pytest.raises(TableFormatError, match="format"):
            parse_table(json.dumps(doc))

    def test_truncated_json(self):
        text = emit_table(klein4())
        with pytest.raises(TableFormatError):
            parse_table(text[: len(text) // 2])

    def test_shape_mismatch(self):
        doc = to_document(klein4())
        doc["order"] = 3
        with pytest.raises(TableFormatError):
            parse_table(json.dumps(doc))

    def test_identity_reindexed_to_zero(self):
        # Permute klein4 so the additive identity sits at index 1.
        perm = [1, 0, 2, 3]
        inv = [1, 0, 2, 3]
        add = [[perm[_KLEIN4_ADD[inv[i]][inv[j]]] for j in range(4)] for i in range(4)]
        mul = [[perm[_KLEIN4_MUL[inv[i]][inv[j]]] for j in range(4)] for i in range(4)]
        doc = {"format": "nearring-table/1", "name": "shuffled", "order": 4,
               "add": add, "mul": mul}
        ring = from_document(parse_table(json.dumps(doc)))
        assert all(ring.add[0][j] == j for j in range(4))
        assert ring.flags == klein4().flags
        assert ring.add == klein4().add and ring.mul == klein4().mul

    def test_bad_one_index(self):
        doc = to_document(klein4())
        doc["one"] = 99
        with pytest.raises(TableFormatError):
            parse_table(json.dumps(doc))
