//! Brute-force reference answers.

use crate::ranked::{ModeAnswer, QueryRange, RankedArray};

/// Exact mode by a full size-k tally of the range. Ties go to the smallest
/// token; the witness is its first position in the range.
pub fn oracle_mode(ra: &RankedArray, r: QueryRange) -> ModeAnswer {
    assert!(r.is_valid_for(ra.len()), "invalid range {r:?}");
    let ranks = ra.raw_ranks();
    let mut tally = vec![0usize; ra.distinct_count()];
    for &b in &ranks[r.i - 1..r.j] {
        tally[b as usize] += 1;
    }
    let (best, &freq) = tally
        .iter()
        .enumerate()
        .max_by(|(a, x), (b, y)| x.cmp(y).then(b.cmp(a)))
        .expect("k >= 1");
    let witness = (r.i..=r.j)
        .find(|&p| ranks[p - 1] as usize == best)
        .expect("mode occurs in range");
    ra.answer(best, freq, witness)
}

/// Checks `answer` against the brute-force mode frequency of `r`: the witness
/// lies in the range, holds the element, and the element's multiplicity equals
/// the mode frequency. Returns a description of the first violation.
pub fn validate_answer(ra: &RankedArray, r: QueryRange, answer: &ModeAnswer) -> Result<(), String> {
    let expected = oracle_mode(ra, r).frequency;
    if answer.frequency != expected {
        return Err(format!(
            "frequency {} != oracle frequency {expected}",
            answer.frequency
        ));
    }
    if answer.witness < r.i || answer.witness > r.j {
        return Err(format!(
            "witness {} outside [{}, {}]",
            answer.witness, r.i, r.j
        ));
    }
    if ra.value(answer.witness) != answer.element {
        return Err(format!(
            "witness {} holds {} not {}",
            answer.witness,
            ra.value(answer.witness),
            answer.element
        ));
    }
    let actual = ra.values()[r.i - 1..r.j]
        .iter()
        .filter(|&&v| v == answer.element)
        .count();
    if actual != answer.frequency {
        return Err(format!(
            "element {} occurs {actual} times, claimed {}",
            answer.element, answer.frequency
        ));
    }
    Ok(())
}
