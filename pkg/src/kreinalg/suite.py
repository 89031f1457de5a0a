"""Property batteries shared by the CLI suite command and the test suite.

Each battery runs `count` seeded cases and returns a JSON-safe dict with
a failure count and worst-case numbers.  Case seeds are derived from the
master seed through SeedSequence spawn keys (battery id, case index), so
reports are bit-for-bit reproducible at a fixed seed.
"""

from __future__ import annotations

import numpy as np

from .bkfact import BKFactorization, bk_factorize, bk_verify, keyth_verify, \
    SignatureFactorization
from .decomp import decompose, projections, validate
from .densela import Tolerance, herm_eig, psd_sqrt, spectral_norm
from .genrand import (GenConfig, gen_injective_factor, gen_invertible,
                      gen_selfadjoint, gen_space, gen_space_with_split,
                      haar_unitary, j_unitary)
from .hermdex import build_congruence, canonical_form, hermitian_indices, \
    is_congruent, transport
from .krein import (KOperator, hilbert_space, k_adjoint, make_space,
                    make_subspace, space_indices)
from .phillips import (canonical_frames, check_compatibility, graph_rep,
                       phillips_extend, represented)

__all__ = [
    "congruence_invariance_battery",
    "sylvester_battery",
    "decomposition_battery",
    "bk_roundtrip_battery",
    "bk_converse_battery",
    "keyth_battery",
    "phillips_battery",
    "identities_battery",
    "run_property_suite",
    "DEFAULT_COUNTS",
]

DEFAULT_COUNTS = {
    "congruence_invariance": 1000,
    "sylvester_classification": 500,
    "decomposition": 1000,
    "bk_roundtrip": 1000,
    "bk_converse": 1000,
    "keyth_pipeline": 300,
    "phillips_extension": 300,
    "keyfact_identities": 500,
}

_NEG_SEARCH_TOL = 1e-6          # residual floor for the non-congruence search
_NEG_RESTARTS = 20


def _seeds(master: int, battery: int, case: int, k: int) -> list[int]:
    seq = np.random.SeedSequence(entropy=master, spawn_key=(battery, case))
    return [int(x) for x in seq.generate_state(k, np.uint64)]


def _rng(master: int, battery: int, case: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=master, spawn_key=(battery, case))
    return np.random.Generator(np.random.PCG64(seq))


def congruence_invariance_battery(seed: int, count: int = 1000, dim_max: int = 8,
                                  tol: Tolerance = Tolerance()) -> dict:
    """Index triples are congruence invariants, checked as exact integers."""
    failures = 0
    for i in range(count):
        s1, s2, s3, s4 = _seeds(seed, 1, i, 4)
        K = gen_space(GenConfig(s1, (1, dim_max)))
        C = gen_selfadjoint(GenConfig(s2, kernel_prob=0.3), K)
        H = gen_space(GenConfig(s3, (K.dim, K.dim)))
        X = gen_invertible(GenConfig(s4), H, K)
        if hermitian_indices(transport(C, X, tol), tol) != hermitian_indices(C, tol):
            failures += 1
    return {"name": "congruence_invariance", "cases": count,
            "failures": failures, "passed": failures == 0}


def sylvester_battery(seed: int, count: int = 500, dim_max: int = 8,
                      tol: Tolerance = Tolerance()) -> dict:
    """Classifier verdict against the constructive oracle, both directions."""
    disagreements = 0
    worst_build = 0.0
    worst_margin = float("inf")
    for i in range(count):
        s1, s2, s3, s4, s5, s6 = _seeds(seed, 2, i, 6)
        Ha = gen_space(GenConfig(s1, (1, dim_max)))
        n = Ha.dim
        mode = i % 3
        if mode == 0:
            A = gen_selfadjoint(GenConfig(s2, kernel_prob=0.3), Ha)
            B, Kb = A, Ha
        else:
            Kb = gen_space(GenConfig(s3, (n, n)))
            B = gen_selfadjoint(GenConfig(s4, kernel_prob=0.3), Kb)
            if mode == 1:
                X = gen_invertible(GenConfig(s5), Ha, Kb)
                A = transport(B, X, tol)
            else:
                A = gen_selfadjoint(GenConfig(s2, kernel_prob=0.3), Ha)
        scale = max(spectral_norm(A.matrix), spectral_norm(B.matrix), 1e-300)
        if is_congruent(A, B, tol):
            X2 = build_congruence(A, B, tol)
            resid = spectral_norm(A.matrix - transport(B, X2, tol).matrix) / scale
            worst_build = max(worst_build, resid)
            if resid > tol.residual_tol:
                disagreements += 1
        else:
            best = _best_alignment_residual(A, B, s6, tol)
            worst_margin = min(worst_margin, best / scale)
            if best <= _NEG_SEARCH_TOL * scale:
                disagreements += 1
    return {"name": "sylvester_classification", "cases": count,
            "failures": disagreements,
            "worst_congruent_residual": float(worst_build),
            "best_noncongruent_residual": (None if worst_margin == float("inf")
                                           else float(worst_margin)),
            "passed": disagreements == 0}


def _best_alignment_residual(A, B, sub_seed: int, tol: Tolerance) -> float:
    """Smallest ||A - X* B X|| over random and canonically aligned X."""
    Ha, Kb = A.domain, B.domain
    n = Ha.dim
    ca = canonical_form(A, tol)
    cb = canonical_form(B, tol)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(entropy=sub_seed)))
    best = float("inf")
    for k in range(_NEG_RESTARTS):
        if k % 2 == 0:
            X = gen_invertible(GenConfig(_seeds(sub_seed, 99, k, 1)[0]), Ha, Kb).X.matrix
        else:
            X = cb.X.X_inv.matrix @ haar_unitary(rng, n) @ ca.X.X.matrix
        cand = Ha.J @ X.conj().T @ Kb.J @ B.matrix @ X
        best = min(best, spectral_norm(A.matrix - cand))
    return best


def decomposition_battery(seed: int, count: int = 1000, dim_max: int = 8,
                          tol: Tolerance = Tolerance()) -> dict:
    """decompose + validate + projection algebra on random operators."""
    failures = 0
    worst_proj = 0.0
    for i in range(count):
        s1, s2 = _seeds(seed, 3, i, 2)
        H = gen_space(GenConfig(s1, (1, dim_max)))
        C = gen_selfadjoint(GenConfig(s2, kernel_prob=0.3), H)
        dec = decompose(C, tol)
        report = validate(C, dec, tol)
        P = projections(C, dec, tol)
        eye = np.eye(H.dim)
        resid = 0.0
        total = np.zeros((H.dim, H.dim), dtype=complex)
        for Q in (P.Q_plus, P.Q_minus, P.Q_zero):
            scaleq = max(1.0, spectral_norm(Q.matrix) ** 2)
            resid = max(resid, spectral_norm(Q.matrix @ Q.matrix - Q.matrix) / scaleq)
            total += Q.matrix
        resid = max(resid, spectral_norm(total - eye))
        worst_proj = max(worst_proj, resid)
        if not report["passed"] or resid > tol.residual_tol:
            failures += 1
    return {"name": "decomposition", "cases": count, "failures": failures,
            "worst_projection_residual": float(worst_proj),
            "passed": failures == 0}


def bk_roundtrip_battery(seed: int, count: int = 1000, dim_max: int = 8,
                         tol: Tolerance = Tolerance()) -> dict:
    """Factor then verify; a fifth of the cases must carry a kernel."""
    failures = 0
    kernel_cases = 0
    worst = 0.0
    for i in range(count):
        s1, s2 = _seeds(seed, 4, i, 2)
        H = gen_space(GenConfig(s1, (1, dim_max)))
        # two of every five cases force a kernel so the coverage quota
        # below holds at any count, not just in expectation
        kp = 1.0 if i % 5 < 2 else 0.15
        C = gen_selfadjoint(GenConfig(s2, kernel_prob=kp), H)
        report = bk_verify(C, bk_factorize(C, tol), tol)
        worst = max(worst, report["product_residual"])
        if report["operator_indices"][2] > 0:
            kernel_cases += 1
        if not report["passed"]:
            failures += 1
    need_kernel = count // 5
    return {"name": "bk_roundtrip", "cases": count, "failures": failures,
            "kernel_cases": kernel_cases, "kernel_cases_required": need_kernel,
            "worst_product_residual": float(worst),
            "passed": failures == 0 and kernel_cases >= need_kernel}


def bk_converse_battery(seed: int, count: int = 1000, dim_max: int = 8,
                        tol: Tolerance = Tolerance(), refactor: int = 50) -> dict:
    """C := A A* forces the factor-space signature; all splits, plus
    invariance under J-unitary refactorizations of one fixed operator."""
    combos = [(n, p, q)
              for n in range(1, dim_max + 1)
              for p in range(0, n + 1)
              for q in range(0, n - p + 1)]
    failures = 0
    for i in range(count):
        n, p, q = combos[i % len(combos)]
        s1, s2, s3 = _seeds(seed, 5, i, 3)
        A_space = gen_space_with_split(GenConfig(s1), p, q)
        H = gen_space(GenConfig(s2, (n, n)))
        A = gen_injective_factor(GenConfig(s3), A_space, H)
        C = KOperator(H, H, A.matrix @ k_adjoint(A).matrix)
        if tuple(hermitian_indices(C, tol)) != (p, q, n - p - q):
            failures += 1

    refactor_failures = 0
    if refactor > 0 and count > 0:
        s1, s2, s3 = _seeds(seed, 5, count + 1, 3)
        A_space = gen_space_with_split(GenConfig(s1), 2, 2)
        H = gen_space(GenConfig(s2, (6, 6)))
        A = gen_injective_factor(GenConfig(s3), A_space, H)
        C = KOperator(H, H, A.matrix @ k_adjoint(A).matrix)
        for k in range(refactor):
            U = j_unitary(_rng(seed, 5, 10 ** 6 + k), A_space.J)
            Fk = BKFactorization(A_space, KOperator(A_space, H, A.matrix @ U))
            if not bk_verify(C, Fk, tol)["passed"]:
                refactor_failures += 1
    return {"name": "bk_converse", "cases": count, "failures": failures,
            "refactorizations": refactor, "refactorization_failures": refactor_failures,
            "passed": failures == 0 and refactor_failures == 0}


def keyth_battery(seed: int, count: int = 300, dim_max: int = 8,
                  tol: Tolerance = Tolerance()) -> dict:
    """Signature factorizations: index identity plus the graph pipeline.

    Each case builds C = T^H J_A T on a Hilbert space with invertible T,
    runs the verifier, then walks the proof machinery: images of the
    spectral parts of C are semidefinite in (K, J_A), their graph
    domains obey the dimension bounds, the pair is orthogonal, and the
    defect operators of the extension have full rank on the graph
    domains.
    """
    failures = 0
    for i in range(count):
        rng = _rng(seed, 6, i)
        n = int(rng.integers(1, dim_max + 1))
        p = int(rng.integers(0, n + 1))
        q = n - p
        signs = np.concatenate([np.ones(p), -np.ones(q)])
        lam = rng.uniform(0.1, 3.0, n) * signs
        Q = haar_unitary(rng, n)
        C_mat = (Q * lam) @ Q.conj().T
        C_mat = 0.5 * (C_mat + C_mat.conj().T)
        T0 = np.sqrt(np.abs(lam))[:, None] * Q.conj().T
        S_diag = np.diag(signs.astype(complex))
        W = j_unitary(rng, S_diag)
        R = haar_unitary(rng, n)
        J_A = R @ S_diag @ R.conj().T
        J_A = 0.5 * (J_A + J_A.conj().T)
        T_mat = R @ W @ T0

        E = hilbert_space(n)
        C = KOperator(E, E, C_mat)
        fact = SignatureFactorization(K_space=E,
                                      J_A=KOperator(E, E, J_A),
                                      T=KOperator(E, E, T_mat))
        report = keyth_verify(C, fact, tol)
        ok = report["passed"]

        A_kre = make_space(J_A, tol)
        pA, qA = space_indices(A_kre, tol)
        dec = decompose(C, tol)
        Sp = make_subspace(A_kre, T_mat @ dec.M_plus.basis, tol)
        Sm = make_subspace(A_kre, T_mat @ dec.M_minus.basis, tol)
        gp = graph_rep(Sp, "plus", tol)
        gm = graph_rep(Sm, "minus", tol)
        ok = ok and gp.M.dim <= pA and gm.M.dim <= qA
        ok = ok and check_compatibility(gp, gm, tol)
        ext = phillips_extend(gp, gm, tol)
        G = ext.G
        dens_p = _rank(gp.M.basis - G.conj().T @ (G @ gp.M.basis), tol)
        dens_m = _rank(gm.M.basis - G @ (G.conj().T @ gm.M.basis), tol)
        ok = ok and dens_p == pA and dens_m == qA
        if not ok:
            failures += 1
    return {"name": "keyth_pipeline", "cases": count, "failures": failures,
            "passed": failures == 0}


def _rank(A: np.ndarray, tol: Tolerance) -> int:
    if min(A.shape) == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    return int(np.count_nonzero(s > tol.rank_tol * s[0])) if s.size else 0


def phillips_battery(seed: int, count: int = 300, dim_max: int = 8,
                     tol: Tolerance = Tolerance()) -> dict:
    """Random compatible semidefinite pairs through the full completion."""
    failures = 0
    worst_norm = 0.0
    worst_restrict = 0.0
    for i in range(count):
        rng = _rng(seed, 7, i)
        n = int(rng.integers(1, dim_max + 1))
        p = int(rng.integers(0, n + 1))
        q = n - p
        s1 = _seeds(seed, 7, 10 ** 6 + i, 1)[0]
        A_kre = gen_space_with_split(GenConfig(s1), p, q)
        U_plus, U_minus = canonical_frames(A_kre, tol)
        G0 = _random_contraction(rng, q, p, 0.95)
        mp = int(rng.integers(0, p + 1))
        mm = int(rng.integers(0, q + 1))
        Kp = haar_unitary(rng, p)[:, :mp]
        Km = haar_unitary(rng, q)[:, :mm]
        Sp = make_subspace(A_kre, (U_plus + U_minus @ G0) @ Kp, tol)
        Sm = make_subspace(A_kre, (U_plus @ G0.conj().T + U_minus) @ Km, tol)
        gp = graph_rep(Sp, "plus", tol)
        gm = graph_rep(Sm, "minus", tol)
        ok = check_compatibility(gp, gm, tol)
        ext = phillips_extend(gp, gm, tol)
        G = ext.G

        norm = spectral_norm(G)
        level = max(spectral_norm(gp.angle), spectral_norm(gm.angle))
        worst_norm = max(worst_norm, norm)
        r1 = spectral_norm(G @ gp.M.basis - gp.angle)
        r2 = spectral_norm(G.conj().T @ gm.M.basis - gm.angle)
        worst_restrict = max(worst_restrict, r1, r2)
        ok = ok and norm <= 1.0 + tol.residual_tol
        ok = ok and norm <= level + tol.residual_tol
        ok = ok and r1 <= tol.residual_tol and r2 <= tol.residual_tol
        ok = ok and _contained(represented(gp, tol), ext.G_tilde_plus, tol)
        ok = ok and _contained(represented(gm, tol), ext.G_tilde_minus, tol)
        gram = ext.G_tilde_minus.basis.conj().T @ A_kre.J @ ext.G_tilde_plus.basis
        ok = ok and spectral_norm(gram) <= tol.residual_tol
        ok = ok and ext.G_tilde_plus.dim == p and ext.G_tilde_minus.dim == q
        if not ok:
            failures += 1
    return {"name": "phillips_extension", "cases": count, "failures": failures,
            "worst_contraction_norm": float(worst_norm),
            "worst_restriction_residual": float(worst_restrict),
            "passed": failures == 0}


def _random_contraction(rng: np.random.Generator, rows: int, cols: int,
                        cap: float) -> np.ndarray:
    if rows == 0 or cols == 0:
        return np.zeros((rows, cols), dtype=complex)
    Z = (rng.standard_normal((rows, cols))
         + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2.0)
    U, _, Vh = np.linalg.svd(Z, full_matrices=False)
    s = rng.uniform(0.0, cap, min(rows, cols))
    return (U * s) @ Vh


def _contained(small, big, tol: Tolerance) -> bool:
    if small.dim == 0:
        return True
    proj = big.basis @ (big.basis.conj().T @ small.basis)
    return spectral_norm(proj - small.basis) <= tol.residual_tol


def identities_battery(seed: int, count: int = 500, dim_max: int = 8,
                       tol: Tolerance = Tolerance()) -> dict:
    """Modulus-root identities of the Hilbert representative.

    |D|^(1/2) J_D |D|^(1/2) rebuilds D (J_D the signature on the
    orthocomplement of the kernel), and |D|^(1/2) leaves both spectral
    bands invariant.
    """
    failures = 0
    worst = 0.0
    for i in range(count):
        s1, s2 = _seeds(seed, 8, i, 2)
        rng = _rng(seed, 8, i)
        n = int(rng.integers(1, dim_max + 1))
        H = hilbert_space(n)
        D = gen_selfadjoint(GenConfig(s2, kernel_prob=0.3), H)
        eig = herm_eig(D.matrix, tol)
        w, V = eig.eigenvalues, eig.eigenvectors
        band = tol.rank_tol * (float(np.max(np.abs(w))) if w.size else 0.0)
        nz = np.abs(w) > band
        J_D = (V[:, nz] * np.sign(w[nz])) @ V[:, nz].conj().T
        root = psd_sqrt((V * np.abs(w)) @ V.conj().T, tol)
        scale = max(1.0, spectral_norm(D.matrix))
        r1 = spectral_norm(root @ J_D @ root - D.matrix) / scale
        B_plus, B_minus = V[:, w > band], V[:, w < -band]
        P_plus = B_plus @ B_plus.conj().T
        P_minus = B_minus @ B_minus.conj().T
        rscale = max(1.0, spectral_norm(root))
        r2 = spectral_norm(root @ B_plus - P_plus @ (root @ B_plus)) / rscale
        r3 = spectral_norm(root @ B_minus - P_minus @ (root @ B_minus)) / rscale
        worst = max(worst, r1, r2, r3)
        if max(r1, r2, r3) > tol.residual_tol:
            failures += 1
    return {"name": "keyfact_identities", "cases": count, "failures": failures,
            "worst_residual": float(worst), "passed": failures == 0}


_BATTERIES = [
    ("congruence_invariance", congruence_invariance_battery),
    ("sylvester_classification", sylvester_battery),
    ("decomposition", decomposition_battery),
    ("bk_roundtrip", bk_roundtrip_battery),
    ("bk_converse", bk_converse_battery),
    ("keyth_pipeline", keyth_battery),
    ("phillips_extension", phillips_battery),
    ("keyfact_identities", identities_battery),
]


def run_property_suite(seed: int, count: int | None = None, dim_max: int = 8,
                       tol: Tolerance = Tolerance()) -> dict:
    """Run every battery; `count` overrides each battery's default size."""
    reports = []
    for name, fn in _BATTERIES:
        cases = DEFAULT_COUNTS[name] if count is None else count
        reports.append(fn(seed, cases, dim_max, tol))
    return {
        "schema_version": 1,
        "seed": int(seed),
        "dim_max": int(dim_max),
        "batteries": reports,
        "passed": all(r["passed"] for r in reports),
    }
