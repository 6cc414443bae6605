"""Tests for the bit-string Pauli representation and state application."""

import numpy as np
import pytest
from hypothesis import given, strategies as st

from paulipad.pauli import (
    PauliKey,
    apply_pauli,
    apply_pauli_inverse,
    pauli_conjugate_sign,
    symplectic_ip,
)
from paulipad.qstate import StateVector, fidelity_phase_insensitive, random_pure_state

from _oracles import dense_pauli


def basis_state(n, z):
    amps = np.zeros(1 << n, dtype=complex)
    amps[z] = 1.0
    return StateVector(n, amps)


class TestSymplectic:
    def test_x_vs_z_anticommute(self):
        # n=1: X=(1,0), Z=(0,1)
        assert symplectic_ip(0b10, 0b01, 1) == 1

    def test_self_product_zero(self):
        for w in range(16):
            assert symplectic_ip(w, w, 2) == 0

    def test_disjoint_supports_commute(self):
        # X x I = (10,00) vs I x Z = (00,01)
        assert symplectic_ip(0b1000, 0b0001, 2) == 0

    def test_range_check(self):
        with pytest.raises(ValueError):
            symplectic_ip(16, 0, 1)

    @given(st.integers(1, 5), st.data())
    def test_symmetric(self, n, data):
        lim = 1 << (2 * n)
        w1 = data.draw(st.integers(0, lim - 1))
        w2 = data.draw(st.integers(0, lim - 1))
        assert symplectic_ip(w1, w2, n) == symplectic_ip(w2, w1, n)

    @given(st.integers(1, 4), st.data())
    def test_detects_commutation_of_dense_matrices(self, n, data):
        lim = 1 << (2 * n)
        w1 = data.draw(st.integers(0, lim - 1))
        w2 = data.draw(st.integers(0, lim - 1))
        k1 = PauliKey.from_descriptor(w1, n)
        k2 = PauliKey.from_descriptor(w2, n)
        p = dense_pauli(n, k1.a, k1.b)
        q = dense_pauli(n, k2.a, k2.b)
        commute = np.allclose(p @ q, q @ p)
        assert (symplectic_ip(w1, w2, n) == 0) == commute


class TestApplyPauli:
    def test_bit_flip_on_first_qubit(self):
        n = 3
        key = PauliKey(n=n, a=0b100, b=0)
        out = apply_pauli(key, basis_state(n, 0))
        assert out.amps[0b100] == 1.0

    def test_z_fixes_all_zero(self):
        n = 3
        key = PauliKey(n=n, a=0, b=0b101)
        out = apply_pauli(key, basis_state(n, 0))
        np.testing.assert_array_equal(out.amps, basis_state(n, 0).amps)

    def test_z_on_plus_state(self):
        plus = StateVector(1, np.array([1, 1]) / np.sqrt(2))
        out = apply_pauli(PauliKey(n=1, a=0, b=1), plus)
        oracle = dense_pauli(1, 0, 1) @ plus.amps
        np.testing.assert_allclose(out.amps, oracle, atol=1e-15)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            apply_pauli(PauliKey(n=2, a=0, b=0), basis_state(3, 0))

    def test_norm_preserved(self):
        psi = random_pure_state(5, seed=3)
        for w in (0, 37, 1023, 600):
            out = apply_pauli(PauliKey.from_descriptor(w, 5), psi)
            assert abs(np.linalg.norm(out.amps) - 1) < 1e-14

    def test_involution_up_to_phase(self):
        psi = random_pure_state(4, seed=9)
        for w in (0b10110101, 0b01010101, 255):
            key = PauliKey.from_descriptor(w, 4)
            twice = apply_pauli(key, apply_pauli(key, psi))
            assert fidelity_phase_insensitive(twice, psi) >= 1 - 1e-14

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_matches_dense_oracle_on_all_basis_states(self, n):
        for w in range(1 << (2 * n)):
            key = PauliKey.from_descriptor(w, n)
            dense = dense_pauli(n, key.a, key.b)
            for z in range(1 << n):
                out = apply_pauli(key, basis_state(n, z))
                np.testing.assert_array_equal(out.amps, dense[:, z])


class TestApplyPauliInverse:
    def test_roundtrip_exact(self):
        psi = random_pure_state(6, seed=21)
        rng = np.random.default_rng(4)
        for _ in range(20):
            key = PauliKey.from_descriptor(int(rng.integers(0, 1 << 12)), 6)
            back = apply_pauli_inverse(key, apply_pauli(key, psi))
            assert fidelity_phase_insensitive(back, psi) >= 1 - 1e-14

    def test_z_only_self_inverse(self):
        psi = random_pure_state(3, seed=8)
        key = PauliKey(n=3, a=0, b=0b011)
        np.testing.assert_allclose(
            apply_pauli(key, psi).amps, apply_pauli_inverse(key, psi).amps)

    def test_single_qubit_xz(self):
        zero = basis_state(1, 0)
        key = PauliKey(n=1, a=1, b=1)
        fwd = apply_pauli(key, zero)
        oracle = dense_pauli(1, 1, 1) @ zero.amps
        np.testing.assert_array_equal(fwd.amps, oracle)
        back = apply_pauli_inverse(key, fwd)
        np.testing.assert_array_equal(back.amps, zero.amps)


class TestConjugateSign:
    def test_identity_target(self):
        key = PauliKey(n=2, a=0b01, b=0b10)
        assert pauli_conjugate_sign(key, 0) == 1

    def test_x_conjugating_z(self):
        key = PauliKey(n=1, a=1, b=0)
        assert pauli_conjugate_sign(key, 0b01) == -1

    def test_self_target(self):
        key = PauliKey(n=2, a=0b11, b=0b01)
        assert pauli_conjugate_sign(key, key.descriptor) == 1

    @given(st.integers(1, 3), st.data())
    def test_matches_dense_conjugation(self, n, data):
        lim = 1 << (2 * n)
        wk = data.draw(st.integers(0, lim - 1))
        wt = data.draw(st.integers(0, lim - 1))
        key = PauliKey.from_descriptor(wk, n)
        tgt = PauliKey.from_descriptor(wt, n)
        p = dense_pauli(n, key.a, key.b)
        t = dense_pauli(n, tgt.a, tgt.b)
        sign = pauli_conjugate_sign(key, wt)
        np.testing.assert_allclose(p @ t @ p.conj().T, sign * t, atol=1e-12)


class TestPauliKey:
    def test_descriptor_roundtrip(self):
        for w in range(64):
            assert PauliKey.from_descriptor(w, 3).descriptor == w

    def test_bad_descriptor(self):
        with pytest.raises(ValueError):
            PauliKey.from_descriptor(64, 3)

    def test_bad_parts(self):
        with pytest.raises(ValueError):
            PauliKey(n=2, a=4, b=0)
