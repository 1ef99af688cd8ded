//! Property tests for the operator laws and the free-mode approximation
//! laws, over arbitrary exact rationals (not restricted to a chain).

use proptest::prelude::*;

use fuzzy_rough::algebra::{Algebra, ImplicatorKind, NegatorKind, TConormKind, TNormKind};
use fuzzy_rough::space::{
    negate_set, pointwise_join, pointwise_meet, ApproximationSpace, FuzzyRelation, FuzzySet,
    Universe,
};
use fuzzy_rough::UnitRational;

fn unit_rational() -> impl Strategy<Value = UnitRational> {
    (1u64..=24)
        .prop_flat_map(|den| (0..=den).prop_map(move |num| UnitRational::new(num, den).unwrap()))
}

fn tnorm_kind() -> impl Strategy<Value = TNormKind> {
    prop_oneof![
        Just(TNormKind::Min),
        Just(TNormKind::Product),
        Just(TNormKind::Lukasiewicz),
    ]
}

fn tconorm_kind() -> impl Strategy<Value = TConormKind> {
    prop_oneof![
        Just(TConormKind::Max),
        Just(TConormKind::ProbSum),
        Just(TConormKind::BoundedSum),
    ]
}

proptest! {
    #[test]
    fn tnorm_laws(kind in tnorm_kind(), x in unit_rational(), y in unit_rational(), z in unit_rational()) {
        prop_assert_eq!(kind.apply(&x, &y), kind.apply(&y, &x));
        prop_assert_eq!(
            kind.apply(&kind.apply(&x, &y), &z),
            kind.apply(&x, &kind.apply(&y, &z))
        );
        prop_assert_eq!(kind.apply(&UnitRational::one(), &x), x.clone());
        prop_assert_eq!(kind.apply(&UnitRational::zero(), &x), UnitRational::zero());
        if y <= z {
            prop_assert!(kind.apply(&x, &y) <= kind.apply(&x, &z));
        }
    }

    #[test]
    fn tconorm_laws(kind in tconorm_kind(), x in unit_rational(), y in unit_rational(), z in unit_rational()) {
        prop_assert_eq!(kind.apply(&x, &y), kind.apply(&y, &x));
        prop_assert_eq!(
            kind.apply(&kind.apply(&x, &y), &z),
            kind.apply(&x, &kind.apply(&y, &z))
        );
        prop_assert_eq!(kind.apply(&UnitRational::zero(), &x), x.clone());
        prop_assert_eq!(kind.apply(&UnitRational::one(), &x), UnitRational::one());
        if y <= z {
            prop_assert!(kind.apply(&x, &y) <= kind.apply(&x, &z));
        }
    }

    /// The residual is the right adjoint of the t-norm: x ⊙ z <= y exactly
    /// when z <= x ▷ y. This pins all three closed forms at once.
    #[test]
    fn residuation_adjunction(kind in tnorm_kind(), x in unit_rational(), y in unit_rational(), z in unit_rational()) {
        let implicator = ImplicatorKind::Residual(kind);
        let residual = implicator.apply(None, &x, &y).unwrap();
        prop_assert_eq!(kind.apply(&x, &z) <= y, z <= residual);
    }

    #[test]
    fn standard_negator_is_an_involution(x in unit_rational()) {
        let n = NegatorKind::Standard;
        let nx = n.apply(None, &x).unwrap();
        prop_assert_eq!(n.apply(None, &nx).unwrap(), x);
    }

    #[test]
    fn s_implicator_matches_its_definition(
        conorm in tconorm_kind(),
        x in unit_rational(),
        y in unit_rational(),
    ) {
        let implicator = ImplicatorKind::S(conorm, NegatorKind::Standard);
        let direct = conorm.apply(&x.complement(), &y);
        prop_assert_eq!(implicator.apply(None, &x, &y).unwrap(), direct);
    }

    #[test]
    fn display_parse_round_trip(x in unit_rational()) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<UnitRational>().unwrap(), x);
    }

    #[test]
    fn n_dual_pairs_satisfy_both_identities(x in unit_rational(), y in unit_rational()) {
        for algebra in [
            Algebra::kleene_dienes(),
            Algebra::residual(TNormKind::Product),
            Algebra::residual(TNormKind::Lukasiewicz),
        ] {
            prop_assert!(algebra.n_dual());
            let n = |v: &UnitRational| algebra.negate(None, v).unwrap();
            prop_assert_eq!(n(&algebra.disj(&x, &y)), algebra.conj(&n(&x), &n(&y)));
            prop_assert_eq!(n(&algebra.conj(&x, &y)), algebra.disj(&n(&x), &n(&y)));
        }
    }
}

/// A free-mode similarity space over arbitrary rationals: symmetric matrix
/// with unit diagonal, closed under max-min composition. Min-transitivity
/// implies ⊙-transitivity for every t-norm.
fn similarity_space(algebra: Algebra) -> impl Strategy<Value = ApproximationSpace> {
    (2usize..=4)
        .prop_flat_map(|n| {
            proptest::collection::vec(unit_rational(), n * (n - 1) / 2)
                .prop_map(move |upper| (n, upper))
        })
        .prop_map(move |(n, upper)| {
            let names: Vec<String> = (0..n).map(|i| format!("u{i}")).collect();
            let universe = Universe::new(names).unwrap();
            let relation = FuzzyRelation::symmetric_from_upper_triangle(universe, &upper).unwrap();
            ApproximationSpace::new(relation.min_transitive_closure(), algebra.clone(), None)
                .unwrap()
        })
}

fn set_for(space: &ApproximationSpace) -> impl Strategy<Value = FuzzySet> {
    let universe = space.universe().clone();
    proptest::collection::vec(unit_rational(), universe.len())
        .prop_map(move |values| FuzzySet::new(universe.clone(), values).unwrap())
}

fn space_and_sets(
    algebra: Algebra,
) -> impl Strategy<Value = (ApproximationSpace, FuzzySet, FuzzySet)> {
    similarity_space(algebra).prop_flat_map(|space| {
        let sets = (set_for(&space), set_for(&space));
        (Just(space), sets).prop_map(|(space, (f, g))| (space, f, g))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sandwich_and_monotonicity((space, f, g) in space_and_sets(Algebra::kleene_dienes())) {
        let lower = space.lower(&f).unwrap();
        let upper = space.upper(&f).unwrap();
        prop_assert!(lower.leq(&f).unwrap());
        prop_assert!(f.leq(&upper).unwrap());

        let bigger = pointwise_join([&f, &g]).unwrap();
        prop_assert!(lower.leq(&space.lower(&bigger).unwrap()).unwrap());
        prop_assert!(upper.leq(&space.upper(&bigger).unwrap()).unwrap());
    }

    #[test]
    fn duality_for_the_standard_negator((space, f, _) in space_and_sets(Algebra::kleene_dienes())) {
        let nf = space.negate(&f).unwrap();
        prop_assert_eq!(
            space.negate(&space.upper(&f).unwrap()).unwrap(),
            space.lower(&nf).unwrap()
        );
        prop_assert_eq!(
            space.negate(&space.lower(&f).unwrap()).unwrap(),
            space.upper(&nf).unwrap()
        );
    }

    /// Idempotence holds for the residual algebras too, including the
    /// product residuum whose quotients leave any fixed grid.
    #[test]
    fn idempotence_for_residual_algebras((space, f, _) in space_and_sets(Algebra::residual(TNormKind::Product))) {
        let upper = space.upper(&f).unwrap();
        let lower = space.lower(&f).unwrap();
        prop_assert_eq!(space.upper(&upper).unwrap(), upper.clone());
        prop_assert_eq!(space.lower(&lower).unwrap(), lower.clone());
    }

    #[test]
    fn idempotence_for_lukasiewicz((space, f, _) in space_and_sets(Algebra::residual(TNormKind::Lukasiewicz))) {
        let upper = space.upper(&f).unwrap();
        let lower = space.lower(&f).unwrap();
        prop_assert_eq!(space.upper(&upper).unwrap(), upper.clone());
        prop_assert_eq!(space.lower(&lower).unwrap(), lower.clone());
    }

    #[test]
    fn approximation_morphisms((space, f, g) in space_and_sets(Algebra::kleene_dienes())) {
        prop_assert_eq!(
            space.lower(&pointwise_meet([&f, &g]).unwrap()).unwrap(),
            pointwise_meet([&space.lower(&f).unwrap(), &space.lower(&g).unwrap()]).unwrap()
        );
        prop_assert_eq!(
            space.upper(&pointwise_join([&f, &g]).unwrap()).unwrap(),
            pointwise_join([&space.upper(&f).unwrap(), &space.upper(&g).unwrap()]).unwrap()
        );
    }

    #[test]
    fn set_negation_is_involutive((space, f, _) in space_and_sets(Algebra::kleene_dienes())) {
        let algebra = space.algebra();
        let nf = negate_set(algebra, None, &f).unwrap();
        prop_assert_eq!(negate_set(algebra, None, &nf).unwrap(), f);
    }
}
