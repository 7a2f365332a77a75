use translatable::properties::{
    holds, lcond_check, left_unitary_characterize, semigroup_criterion, PropertyName,
};
use translatable::translatable::table_from_sequence;
use translatable::KSequence;

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    heap(n, &mut cur, &mut out);
    out.sort();
    out
}

fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(a.clone());
        return;
    }
    for i in 0..k {
        heap(k - 1, a, out);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
}

#[test]
fn modular_conditions_match_definitions() {
    for n in 2..=6 {
        for k in 1..n {
            for p in permutations(n) {
                let seq = KSequence::new(n, k, p).unwrap();
                let t = table_from_sequence(&seq);
                for &prop in PropertyName::LCOND {
                    assert_eq!(
                        lcond_check(&seq, prop).unwrap(),
                        holds(&t, prop).unwrap(),
                        "{prop} {seq}"
                    );
                }
                assert_eq!(
                    semigroup_criterion(&seq).unwrap(),
                    holds(&t, PropertyName::Associative).unwrap(),
                    "{seq}"
                );
            }
        }
    }
}

#[test]
fn left_unitary_predictions_match_definitions() {
    for n in 2..=16 {
        for k in 1..n {
            let t = table_from_sequence(&KSequence::identity(n, k).unwrap());
            for (prop, expected) in left_unitary_characterize(n, k) {
                assert_eq!(holds(&t, prop).unwrap(), expected, "{prop} n={n} k={k}");
            }
        }
    }
}
