"""Randomized cross-validation suites, shared by property and acceptance tests.

Each function runs a seeded batch of exact checks against an independent
oracle (or an internal consistency law) and returns the number of cases it
verified.  All assertions are exact — no tolerances.
"""

import random
from fractions import Fraction

import oracles
from jumploci.fox import (Abelianization, FreeWord, Presentation,
                          alexander_matrix, fox_derivative_abelianized,
                          generator_character_poly)
from jumploci.laurent import LaurentPoly
from jumploci.omega import omega_codim1_closed_form, omega_membership
from jumploci.qlinalg import (RationalSubspace, lattice_coset_membership,
                              lattice_coset_solve, plucker, sigma_membership)
from jumploci.tori import TorsionCharacter, TranslatedTorus, VarietyDescription, \
    sigma_rho_membership

F = Fraction


def _random_subspace(rng, n, max_rows=None, entry=2):
    rows = [[rng.randint(-entry, entry) for _ in range(n)]
            for _ in range(rng.randint(0, n if max_rows is None else max_rows))]
    return rows, RationalSubspace.from_rows([[F(x) for x in r] for r in rows], n)


def suite_partition_oracle(cases=210, seed=101):
    """Maximal admissible-partition subspaces match the brute-force oracle."""
    from jumploci.tcone import admissible_partitions_maximal, partition_subspace
    rng = random.Random(seed)
    done = 0
    while done < cases:
        n = rng.randint(2, 4)
        terms = {}
        for _ in range(rng.randint(1, 7)):
            expo = tuple(rng.randint(-2, 2) for _ in range(n))
            terms[expo] = terms.get(expo, 0) + rng.choice([-3, -2, -1, 1, 2, 3])
        terms = {e: F(c) for e, c in terms.items() if c != 0}
        if not terms:
            continue
        if rng.random() < 0.5:
            # steer half the sample onto the identity (nonempty cones)
            total = sum(terms.values())
            anchor = next(iter(terms))
            terms[anchor] -= total
            terms = {e: c for e, c in terms.items() if c != 0}
            if not terms:
                continue
        f = LaurentPoly(n, terms)
        ours = {partition_subspace(p, f)
                for p in admissible_partitions_maximal(f, max_support=7)}
        theirs = {
            RationalSubspace.from_rows([[F(x) for x in row] for row in rows], n)
            for rows in oracles.oracle_tangent_cone(dict(f.terms), n)
        }
        assert ours == theirs
        done += 1
    return done


def suite_lattice_oracle(cases=220, seed=102):
    """Coset membership (and its witness) agree with the determinantal oracle."""
    rng = random.Random(seed)
    done = 0
    hits = 0
    while done < cases:
        n = rng.randint(1, 4)
        rows, space = _random_subspace(rng, n)
        lam = [F(rng.randint(-14, 14), rng.randint(1, 12)) for _ in range(n)]
        ours = lattice_coset_membership(lam, space)
        theirs = oracles.oracle_lattice_membership(lam, rows, n)
        assert ours == theirs
        witness = lattice_coset_solve(lam, space)
        assert (witness is not None) == ours
        if witness is not None:
            hits += 1
            assert all(x == int(x) for x in witness)
            assert space.contains_vector([a - b for a, b in zip(lam, witness)])
        done += 1
    assert hits > cases // 20  # the sample exercises both outcomes
    return done


def suite_fox_product_rule(cases=200, seed=103):
    """d(uv) = du + t^alpha(u) dv for the abelianized left derivative."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        q = rng.randint(1, 3)
        n = rng.randint(1, 3)
        proj = tuple(tuple(rng.randint(-2, 2) for _ in range(n)) for _ in range(q))
        ab = Abelianization(free_rank=n, projection=proj, torsion_invariants=())

        def rand_word():
            syllables = [(rng.randrange(q), rng.choice([-2, -1, 1, 2]))
                         for _ in range(rng.randint(0, 4))]
            return FreeWord(tuple(syllables))

        u, v = rand_word(), rand_word()
        uv = u * v
        exps = u.exponent_vector(q)
        alpha_u = tuple(sum(exps[g] * proj[g][k] for g in range(q))
                        for k in range(n))
        shift = LaurentPoly.monomial(alpha_u, 1, n)
        for j in range(q):
            left = fox_derivative_abelianized(uv, j, ab)
            right = fox_derivative_abelianized(u, j, ab) + \
                shift * fox_derivative_abelianized(v, j, ab)
            assert left == right
        done += 1
    return done


def suite_fox_row_identity(cases=200, seed=105):
    """Every matrix row satisfies sum_j entry * (t^alpha(x_j) - 1) = 0."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        q = rng.randint(1, 4)
        names = tuple(f"g{i+1}" for i in range(q))
        relators = []
        for _ in range(rng.randint(1, 4)):
            syllables = [(rng.randrange(q), rng.choice([-2, -1, 1, 2]))
                         for _ in range(rng.randint(1, 6))]
            relators.append(FreeWord(tuple(syllables)))
        pres = Presentation(names, tuple(relators))
        matrix = alexander_matrix(pres)
        assert matrix.fundamental_identity_holds()
        ab = matrix.abelianization
        n = ab.free_rank
        gen_polys = [generator_character_poly(ab, j) for j in range(q)]
        for row in matrix.entries:
            total = LaurentPoly.zero(n)
            for entry, gp in zip(row, gen_polys):
                total = total + entry * gp
            assert total.is_zero()
            done += 1
    return done


def suite_plucker_relations(cases=200, seed=106):
    """Plücker coordinates of actual planes satisfy all exchange relations."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        r = rng.randint(2, 3)
        n = rng.randint(r + 1, 6)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(r)]
        space = RationalSubspace.from_rows([[F(x) for x in row] for row in rows], n)
        if space.dim != r:
            continue
        coords = plucker(space).coords
        residuals = oracles.plucker_relation_residuals(list(coords), r, n)
        assert residuals and all(v == 0 for v in residuals)
        done += 1
    return done


def suite_sigma_containment(cases=210, seed=107):
    """Translated incidence implies untranslated incidence; equality at 1."""
    rng = random.Random(seed)
    done = 0
    translated_hits = 0
    while done < cases:
        n = rng.randint(3, 5)
        _, P = _random_subspace(rng, n, max_rows=3)
        if P.is_zero():
            continue
        _, L = _random_subspace(rng, n, max_rows=3)
        if rng.random() < 0.3:
            rho = TorsionCharacter([0] * n)
        else:
            rho = TorsionCharacter(
                [F(rng.randint(0, 3), rng.randint(1, 4)) for _ in range(n)])
        rho_hit = sigma_rho_membership(P, L, rho)
        plain_hit = sigma_membership(P, L)
        if rho_hit:
            assert plain_hit
            translated_hits += 1
        if lattice_coset_membership(rho.values, L):
            assert rho_hit == plain_hit
        done += 1
    assert translated_hits > cases // 20
    return done


def suite_closed_form_agreement(cases=200, seed=108):
    """Codimension-one closed form equals the direct membership test."""
    rng = random.Random(seed)
    done = 0
    while done < cases:
        n = rng.randint(2, 4)
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n - 1)]
        L = RationalSubspace.from_rows([[F(x) for x in r] for r in rows], n)
        if L.dim != n - 1:
            continue
        comps = []
        for _ in range(rng.randint(1, 2)):
            for _attempt in range(30):
                lam = [F(rng.randint(0, 3), rng.randint(1, 4)) for _ in range(n)]
                if not lattice_coset_membership(lam, L):
                    comps.append(TranslatedTorus.from_data(lam, L.basis, n))
                    break
        if not comps:
            continue
        if rng.random() < 0.5:
            comps.append(TranslatedTorus.from_data([0] * n, [], n))
        desc = VarietyDescription(n, comps)
        r = rng.randint(1, n)
        closed = omega_codim1_closed_form(desc, r)
        plane = None
        for _attempt in range(30):
            cand_rows = [[F(rng.randint(-2, 2)) for _ in range(n)]
                         for _ in range(r)]
            cand = RationalSubspace.from_rows(cand_rows, n)
            if cand.dim == r:
                plane = cand
                break
        if plane is None:
            continue
        assert closed.contains(plane) == omega_membership(desc, plane).member
        done += 1
    return done


ALL_SUITES = (
    suite_partition_oracle,
    suite_lattice_oracle,
    suite_fox_product_rule,
    suite_fox_row_identity,
    suite_plucker_relations,
    suite_sigma_containment,
    suite_closed_form_agreement,
)
