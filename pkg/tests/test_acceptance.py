"""Acceptance suite: ten property-based criteria, one pass/fail line each.

Each test prints a single ``[criterion N] name: PASS|FAIL`` line before its
assertion, so a ``pytest -v`` (or ``-s``) run is self-documenting.
"""

import itertools

import numpy as np
import pytest

from convsep.abelian import conjugate_measures, make_group
from convsep.hilbert import (
    HermitianOperator,
    TensorSpaceShape,
    eig_hermitian,
    partial_trace,
    projector,
    tensor,
)
from convsep.instances import intro_mappings, random_decomposition, random_mappings
from convsep.separability import (
    CapacityError,
    VerdictStatus,
    operator_dual_side,
    operator_from_decomposition,
    operator_from_mappings,
    ppt_check,
    relative_max_norm_distance,
    synthesize_mappings,
)
from convsep.spectral import (
    AngleCondition,
    gram_spectral_condition,
    z2_angle_condition,
    zn_construct,
)
from convsep.transform import (
    ScalarFunction,
    VectorMapping,
    convolve_scalar,
    fourier,
    fourier_scalar,
    tensor_convolve,
)

E1 = np.array([1, 0], dtype=complex)
E2 = np.array([0, 1], dtype=complex)


def report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {number}] {name}: {status}{suffix}")
    return ok


def rand_vec(rng, d):
    return rng.uniform(-1, 1, d) + 1j * rng.uniform(-1, 1, d)


def groups_up_to(limit):
    """Invariant-factor chains d1 | d2 | ... with product <= limit."""
    out = []

    def extend(chain, product, minimum):
        for d in range(minimum, limit // product + 1):
            if chain and d % chain[-1] != 0:
                continue
            out.append(chain + [d])
            extend(chain + [d], product * d, d)

    extend([], 1, 2)
    return out


def instance_grid():
    """>= 200 random instances across the mandated groups, m and dims."""
    groups = [[2], [3], [4], [2, 2], [6], [2, 3]]
    rng = np.random.default_rng(2024)
    grid = []
    seed = 0
    for moduli, m in itertools.product(groups, (2, 3)):
        for _ in range(17):
            dims = tuple(int(rng.integers(2, 4)) for _ in range(m))
            grid.append((seed, moduli, dims))
            seed += 1
    assert len(grid) >= 200
    return grid


def test_criterion_1_intro_identity():
    rng = np.random.default_rng(1)
    worst = 0.0
    for _ in range(50):
        dv = int(rng.integers(2, 4))
        dw = int(rng.integers(2, 4))
        v0, v1 = rand_vec(rng, dv), rand_vec(rng, dv)
        w0, w1 = rand_vec(rng, dw), rand_vec(rng, dw)
        lhs = projector(tensor([v0, w0]) + tensor([v1, w1])) + projector(
            tensor([v0, w1]) + tensor([v1, w0])
        )
        rhs = 0.5 * projector(tensor([v0 + v1, w0 + w1])) + 0.5 * projector(
            tensor([v0 - v1, w0 - w1])
        )
        built = operator_from_mappings(intro_mappings(v0, v1, w0, w1)).matrix
        worst = max(
            worst,
            float(np.max(np.abs(built - lhs))),
            float(np.max(np.abs(built - rhs))),
        )
    ok = worst <= 1e-12
    assert report(1, "intro identity Eq.(1) = Eq.(2)", ok, f"max-norm {worst:.2e}")


def test_criterion_2_central_equality():
    worst = 0.0
    count = 0
    for seed, moduli, dims in instance_grid():
        maps = random_mappings(seed, moduli, dims)
        primal = operator_from_mappings(maps)
        dual = operator_dual_side(maps)
        worst = max(worst, relative_max_norm_distance(primal.matrix, dual.matrix))
        count += 1
    ok = worst <= 1e-9
    assert report(
        2, "central equality primal = dual", ok, f"{count} instances, rel {worst:.2e}"
    )


def test_criterion_3_psd_and_ppt():
    ok = True
    count = 0
    for seed, moduli, dims in instance_grid():
        op = operator_from_mappings(random_mappings(seed, moduli, dims))
        vals, _ = eig_hermitian(op.matrix)
        scale = max(1.0, float(np.max(np.abs(op.matrix))))
        if vals[0] < -1e-8 * scale:
            ok = False
        for cut in range(1, len(dims)):
            if ppt_check(op, cut).status is VerdictStatus.ENTANGLED_PPT:
                ok = False
        count += 1
    assert report(3, "constructions PSD and PPT on all cuts", ok, f"{count} instances")


def test_criterion_4_synthesis_roundtrip():
    cases = [
        (1, [6], (2, 2), 6),
        (2, [2, 3], (2, 2), 5),
        (3, [8], (2, 2, 2), 8),
        (4, [4, 4], (2, 2), 16),  # boundary: P = (dim H)^2 with |G| >= (dim H)^2
        (5, [3, 3], (3, 3), 9),
        (6, [2], (2, 2), 2),
    ]
    worst = 0.0
    for seed, moduli, dims, terms in cases:
        d = random_decomposition(seed, dims, terms)
        maps = synthesize_mappings(d, make_group(moduli))
        rebuilt = operator_from_mappings(maps)
        target = operator_from_decomposition(d)
        worst = max(worst, relative_max_norm_distance(rebuilt.matrix, target.matrix))
    capacity_raised = False
    try:
        synthesize_mappings(random_decomposition(7, (2, 2), 3), make_group([2]))
    except CapacityError:
        capacity_raised = True
    ok = worst <= 1e-8 and capacity_raised
    assert report(
        4,
        "synthesis round trip and capacity error",
        ok,
        f"rel {worst:.2e}, capacity_raised={capacity_raised}",
    )


def test_criterion_5_parseval_and_convolution_theorem():
    rng = np.random.default_rng(5)
    worst = 0.0
    tested = 0
    for moduli in groups_up_to(64):
        g = make_group(moduli)
        measure = conjugate_measures(g)
        f = ScalarFunction(g, measure, rand_vec(rng, g.order))
        fp = ScalarFunction(g, measure, rand_vec(rng, g.order))
        fh, fph = fourier_scalar(f), fourier_scalar(fp)
        lhs = np.vdot(f.values, fp.values) * measure.primal_weight
        rhs = np.vdot(fh.values, fph.values) * measure.dual_weight
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1e-30))
        conv_hat = fourier_scalar(convolve_scalar(f, fp)).values
        product = fh.values * fph.values
        scale = max(float(np.max(np.abs(product))), 1e-30)
        worst = max(worst, float(np.max(np.abs(conv_hat - product))) / scale)
        tested += 1
    ok = worst <= 1e-11
    assert report(
        5,
        "Parseval and convolution theorem, |G| <= 64",
        ok,
        f"{tested} groups, rel {worst:.2e}",
    )


def test_criterion_6_fourier_diagonalization():
    worst = 0.0
    for seed, moduli, dims in instance_grid()[:60]:
        maps = random_mappings(seed, moduli, dims)
        conv_hat = fourier(tensor_convolve(maps)).values
        hats = [fourier(m).values for m in maps]
        expected = np.array(
            [tensor([h[chi] for h in hats]) for chi in range(conv_hat.shape[0])]
        )
        scale = max(float(np.max(np.abs(expected))), 1e-30)
        worst = max(worst, float(np.max(np.abs(conv_hat - expected))) / scale)
    ok = worst <= 1e-10
    assert report(
        6, "Fourier diagonalization of the tensor convolution", ok, f"rel {worst:.2e}"
    )


def _equal_norm_quadruples(total):
    rng = np.random.default_rng(7)
    quads = []
    per_kind = total // 3
    for _ in range(per_kind):  # engineered cancelling cosines
        d = int(rng.integers(2, 5))
        v0 = rand_vec(rng, d)
        v0 /= np.linalg.norm(v0)
        v1 = rand_vec(rng, d)
        v1 /= np.linalg.norm(v1)
        c1 = float(np.vdot(v0, v1).real)
        w0 = rand_vec(rng, d)
        w0 /= np.linalg.norm(w0)
        u = rand_vec(rng, d)
        u -= np.vdot(w0, u) * w0
        u /= np.linalg.norm(u)
        w1 = -c1 * w0 + np.sqrt(max(0.0, 1 - c1**2)) * u
        w1 /= np.linalg.norm(w1)
        quads.append((v0, v1, w0, w1))
    for _ in range(per_kind):  # dependent pairs
        d = int(rng.integers(2, 5))
        v0 = rand_vec(rng, d)
        v0 /= np.linalg.norm(v0)
        w0 = rand_vec(rng, d)
        w0 /= np.linalg.norm(w0)
        ph = np.exp(1j * rng.uniform(0, 2 * np.pi, 2))
        quads.append((v0, ph[0] * v0, w0, ph[1] * w0))
    while len(quads) < total:  # generic
        d = int(rng.integers(2, 5))
        vs = [rand_vec(rng, d) for _ in range(4)]
        quads.append(tuple(v / np.linalg.norm(v) for v in vs))
    return quads


def test_criterion_7_angle_condition_equivalence():
    g = make_group([2])
    measure = conjugate_measures(g)
    agree = True
    for v0, v1, w0, w1 in _equal_norm_quadruples(200):
        cond = z2_angle_condition(v0, v1, w0, w1, tol=1e-10)
        conv = tensor_convolve(
            [
                VectorMapping(g, measure, np.array([v0, v1])),
                VectorMapping(g, measure, np.array([w0, w1])),
            ]
        )
        spectral = gram_spectral_condition(conv).is_spectral
        if spectral != (cond is not AngleCondition.NEITHER):
            agree = False
    assert report(7, "angle condition iff spectral pair", agree, "200 quadruples")


def test_criterion_8_zn_gram_and_homothety():
    # Homothety clause: reduced operators equal n^(m-2) * I for constant lambda.
    homothety_worst = 0.0
    for n, m in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]:
        constr = zn_construct([np.eye(n)] * m, [np.ones(n)] * m)
        for g in range(n):
            op = HermitianOperator(
                constr.shape, projector(constr.mapping.values[g])
            )
            expected = n ** (m - 2) * np.eye(n)
            for mu in range(m):
                reduced = partial_trace(op, keep=mu)
                homothety_worst = max(
                    homothety_worst, float(np.max(np.abs(reduced - expected)))
                )
    homothety_ok = homothety_worst <= 1e-10

    # Gram clause, stated form: Gram = prod_mu(sum_g |lambda^mu_g|^2) * I.
    gram_worst = 0.0
    rng = np.random.default_rng(8)
    for n, m in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (4, 3)]:
        lambdas = [rand_vec(rng, n) for _ in range(m)]
        constr = zn_construct([np.eye(n)] * m, lambdas)
        gram = constr.mapping.values @ constr.mapping.values.conj().T
        claimed = np.prod([np.sum(np.abs(l) ** 2) for l in lambdas])
        scale = max(float(claimed), 1e-30)
        gram_worst = max(
            gram_worst,
            float(np.max(np.abs(gram - claimed * np.eye(n)))) / scale,
        )
    gram_ok = gram_worst <= 1e-10

    ok = gram_ok and homothety_ok
    assert report(
        8,
        "cyclic construction Gram constant and homothety",
        ok,
        f"gram rel {gram_worst:.2e} (ok={gram_ok}), "
        f"homothety {homothety_worst:.2e} (ok={homothety_ok})",
    )


def test_criterion_9_bell_negative_control():
    bell = (tensor([E1, E1]) + tensor([E2, E2])) / np.sqrt(2)
    op = HermitianOperator(TensorSpaceShape((2, 2)), projector(bell))
    verdict = ppt_check(op, cut=1)
    ok = (
        verdict.status is VerdictStatus.ENTANGLED_PPT
        and verdict.violation is not None
        and abs(verdict.violation.eigenvalue - (-0.5)) <= 1e-10
    )
    eig = verdict.violation.eigenvalue if verdict.violation else float("nan")
    assert report(
        9, "Bell projector flagged EntangledPPT", ok, f"violating eig {eig:.12f}"
    )


def test_criterion_10_measure_scaling_covariance():
    # Oracle-confirm the exponent empirically before asserting covariance.
    exponents = set()
    for m in (2, 3):
        dims = (2,) * m
        op1 = operator_from_mappings(random_mappings(10, [3], dims, 1.0))
        op2 = operator_from_mappings(random_mappings(10, [3], dims, 2.0))
        ratio = np.max(np.abs(op2.matrix)) / np.max(np.abs(op1.matrix))
        exponents.add((m, round(float(np.log2(ratio)))))
    confirmed = exponents == {(2, 3), (3, 5)}  # exponent 2m - 1

    worst = 0.0
    verdicts_stable = True
    for c in (0.5, 2.0):
        for m, dims in [(2, (2, 2)), (3, (2, 2, 2))]:
            base = random_mappings(11, [2, 2], dims, 1.0)
            scaled = random_mappings(11, [2, 2], dims, c)
            op1 = operator_from_mappings(base)
            op2 = operator_from_mappings(scaled)
            predicted = c ** (2 * m - 1) * op1.matrix
            worst = max(worst, relative_max_norm_distance(op2.matrix, predicted))
            for cut in range(1, m):
                if ppt_check(op1, cut).status != ppt_check(op2, cut).status:
                    verdicts_stable = False
    ok = confirmed and worst <= 1e-10 and verdicts_stable
    assert report(
        10,
        "measure-scaling covariance, exponent 2m-1",
        ok,
        f"rel {worst:.2e}, verdicts_stable={verdicts_stable}",
    )
