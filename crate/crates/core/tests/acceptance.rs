//! Exit criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion fails. Run with `--nocapture` to see the lines.

use geocipher::alphabet::{to_numbers, Alphabet, PlainSequence, BUILTIN_ID};
use geocipher::container::{deserialize, serialize, CipherStream};
use geocipher::geometry::{LineGF, LineSI, Poly, Rational};
use geocipher::repro::{build_report, DiscrepancyKind};
use geocipher::scheme::index_line::{decode_ile, decode_il, encode_ile, encode_il};
use geocipher::scheme::lagrange::{decode_lg, encode_lg};
use geocipher::scheme::pair_line::{decode_pl, encode_pl, validate_pl};
use geocipher::scheme::Scheme;
use geocipher::stats::{expansion_ratio, max_dimension};
use geocipher::Error;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;

const PHRASE: &str = "I_LOVE_MY_MOTHER";
const PHRASE_CODES: [u32; 16] = [9, 27, 12, 15, 22, 5, 27, 13, 25, 27, 13, 15, 20, 8, 5, 18];
const COMBINED_Y: [u32; 16] = [9, 27, 12, 15, 22, 5, 27, 13, 15, 20, 8, 5, 18, 27, 27, 27];
const CASES: usize = 1000;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn phrase() -> PlainSequence {
    to_numbers(PHRASE, &Alphabet::builtin()).unwrap()
}

fn random_seq(rng: &mut ChaCha8Rng, min: usize, max: usize) -> PlainSequence {
    let n = rng.random_range(min..=max);
    let codes = (0..n).map(|_| rng.random_range(1..=27u32)).collect();
    PlainSequence::new(codes, BUILTIN_ID).unwrap()
}

fn slope_table() -> Outcome {
    let expected: [(i64, i64, i64, i64); 16] = [
        (18, 1, -9, 1),
        (-15, 1, 57, 1),
        (3, 1, 3, 1),
        (7, 1, -13, 1),
        (-17, 1, 107, 1),
        (22, 1, -127, 1),
        (-14, 1, 125, 1),
        (12, 1, -83, 1),
        (2, 1, 7, 1),
        (-14, 1, 167, 1),
        (2, 1, -9, 1),
        (5, 1, -45, 1),
        (-12, 1, 176, 1),
        (-3, 1, 50, 1),
        (13, 1, -190, 1),
        (3, 5, 42, 5),
    ];
    let cipher = encode_il(&phrase()).map_err(|e| e.to_string())?;
    ensure(cipher.records.len() == 16, || format!("{} records", cipher.records.len()))?;
    for (k, (&(an, ad, bn, bd), got)) in expected.iter().zip(&cipher.records).enumerate() {
        let want = LineSI { a: Rational::new(an, ad), b: Rational::new(bn, bd) };
        ensure(*got == want, || format!("record {}: got {got:?}, want {want:?}", k + 1))?;
    }
    Ok(())
}

fn general_form_table() -> Outcome {
    let expected = [
        (-12, -3, 189),
        (-10, -10, 270),
        (8, -5, -151),
        (14, 2, -404),
        (-12, 12, -24),
        (-7, -7, 196),
        (10, 15, -320),
        (9, -4, 27),
    ];
    let cipher = encode_pl(&phrase(), 27).map_err(|e| e.to_string())?;
    ensure(cipher.records.len() == 8, || format!("{} records", cipher.records.len()))?;
    for (k, (&(a, b, c), got)) in expected.iter().zip(&cipher.records).enumerate() {
        let want = LineGF::new(a, b, c).unwrap();
        ensure(*got == want, || format!("record {}: got {got:?}, want {want:?}", k + 1))?;
    }
    Ok(())
}

fn lagrange_blocks() -> Outcome {
    let a = Alphabet::builtin();
    let seq = to_numbers("I_LOVE_MOTHER", &a).map_err(|e| e.to_string())?;
    let cipher = encode_lg(&seq, 4, a.interval_code()).map_err(|e| e.to_string())?;
    let p1 = vec![Rational::integer(-93), Rational::integer(161), Rational::new(-135, 2), Rational::new(17, 2)];
    ensure(cipher.records[0].coeffs == p1, || format!("P1 = {:?}", cipher.records[0].coeffs))?;

    for (i, &y) in COMBINED_Y.iter().enumerate() {
        let x = Rational::integer(i as i64 + 1);
        let v = cipher.records[i / 4].eval(&x);
        ensure(v == Rational::from(y), || format!("P{}({x}) = {v}, want {y}", i / 4 + 1))?;
    }

    let printed = [
        ["184.2", "-207.72", "48.7", "-3.18"],
        ["-55.67", "82.91", "-12.77", "0.52"],
        ["15.92", "2.22", "-0.15", "0.003"],
    ];
    let half = Rational::new(1, 2);
    for (j, coeffs) in printed.iter().enumerate() {
        let poly = Poly::new(coeffs.iter().map(|c| Rational::from_decimal(c).unwrap()).collect());
        let block = j + 1;
        let misses = (0..4).any(|k| {
            let x = block * 4 + k;
            (poly.eval(&Rational::integer(x as i64 + 1)) - Rational::from(COMBINED_Y[x])).abs() > half
        });
        ensure(misses, || format!("printed P{} interpolates within 1/2", block + 1))?;
    }

    let report = build_report().map_err(|e| e.to_string())?;
    let flagged = report
        .discrepancies
        .iter()
        .find(|d| d.kind == DiscrepancyKind::NonInterpolatingPolynomials)
        .ok_or("report does not flag the printed polynomials")?;
    for name in ["P2", "P3", "P4"] {
        ensure(flagged.detail.contains(name), || format!("{name} not flagged"))?;
    }
    ensure(!flagged.detail.contains("P1"), || "P1 wrongly flagged".into())
}

fn alphabet_codes() -> Outcome {
    let got = phrase();
    ensure(got.codes() == PHRASE_CODES, || format!("{:?}", got.codes()))
}

fn round_trips() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e6f);
    for case in 0..CASES {
        let seq = random_seq(&mut rng, 2, 64);
        let il = encode_il(&seq).and_then(|c| decode_il(&c, true));
        ensure(il.as_ref().ok() == Some(&seq), || format!("IL case {case}: {:?} -> {il:?}", seq.codes()))?;
        let ile = encode_ile(&seq).and_then(|c| decode_ile(&c, true));
        ensure(ile.as_ref().ok() == Some(&seq), || format!("ILE case {case}: {:?} -> {ile:?}", seq.codes()))?;
    }

    let mut accepted = 0;
    let mut tried = 0;
    while accepted < CASES {
        tried += 1;
        let seq = random_seq(&mut rng, 5, 64);
        if !validate_pl(&seq, 27).is_empty() {
            continue;
        }
        accepted += 1;
        let pl = encode_pl(&seq, 27).and_then(|c| decode_pl(&c, true));
        ensure(pl.as_ref().ok() == Some(&seq), || format!("PL: {:?} -> {pl:?}", seq.codes()))?;
    }
    ensure(tried < 10 * CASES, || format!("validate_pl accepted only {accepted} of {tried}"))?;

    let block_sizes = [2, 3, 4, 5, 8];
    for g in block_sizes {
        for case in 0..CASES {
            let seq = random_seq(&mut rng, 1, 64);
            let lg = encode_lg(&seq, g, 27).and_then(|c| decode_lg(&c, true));
            ensure(lg.as_ref().ok() == Some(&seq), || format!("LG g={g} case {case}: {:?} -> {lg:?}", seq.codes()))?;
        }
    }
    Ok(())
}

fn degenerate_inputs() -> Outcome {
    let aaaa = to_numbers("AAAA", &Alphabet::builtin()).unwrap();
    let r = encode_pl(&aaaa, 27);
    ensure(matches!(r, Err(Error::DuplicatePoint(_))), || format!("AAAA: {r:?}"))?;

    let steps = PlainSequence::new(vec![1, 1, 2, 2, 3, 3], BUILTIN_ID).unwrap();
    let r = encode_pl(&steps, 27);
    ensure(matches!(r, Err(Error::CollinearAmbiguity(_))), || format!("(1,1,2,2,3,3): {r:?}"))?;

    let ramp = PlainSequence::new(vec![1, 2, 3, 4], BUILTIN_ID).unwrap();
    let cipher = encode_il(&ramp).map_err(|e| e.to_string())?;
    ensure(cipher.records[0] == cipher.records[1], || "records 1 and 2 should coincide".into())?;
    let r = decode_il(&cipher, false);
    ensure(r.as_ref().ok() == Some(&ramp), || format!("(1,2,3,4): {r:?}"))
}

fn dimension_bound() -> Outcome {
    ensure(max_dimension(3).ok() == Some(1), || format!("N=3: {:?}", max_dimension(3)))?;
    ensure(max_dimension(16).ok() == Some(6), || format!("N=16: {:?}", max_dimension(16)))?;
    ensure(max_dimension(2).is_err(), || "N=2 accepted".into())
}

fn expansion() -> Outcome {
    let cases = [
        (Scheme::IndexLine, 16, None, Rational::integer(2)),
        (Scheme::PairLine, 16, None, Rational::new(3, 2)),
        (Scheme::Lagrange, 13, Some(4), Rational::new(16, 13)),
    ];
    for (scheme, n, g, want) in cases {
        let got = expansion_ratio(scheme, n, g).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{scheme} N={n}: {got}, want {want}"))?;
    }
    Ok(())
}

fn container() -> Outcome {
    let alphabet = Alphabet::builtin();
    let mut rng = ChaCha8Rng::seed_from_u64(0x67656f63);
    let mut produced = 0;
    while produced < CASES {
        let scheme = Scheme::ALL[produced % 4];
        let seq = random_seq(&mut rng, 2, 48);
        let g = rng.random_range(2..=8);
        let Ok(stream) = CipherStream::encode(&seq, &alphabet, scheme, g) else {
            continue;
        };
        produced += 1;
        let bytes = serialize(&stream);
        let back = deserialize(&bytes).map_err(|e| format!("{scheme}: {e}"))?;
        ensure(back == stream, || format!("{scheme}: stream changed"))?;
        ensure(serialize(&back) == bytes, || format!("{scheme}: bytes changed"))?;
    }

    let goldens: [(&str, &str); 4] = [
        ("slope_intercept.txt", include_str!("golden/slope_intercept.txt")),
        ("general_form.txt", include_str!("golden/general_form.txt")),
        ("lagrange.txt", include_str!("golden/lagrange.txt")),
        ("discrepancies.txt", include_str!("golden/discrepancies.txt")),
    ];
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let written = geocipher::repro::repro_report(dir.path()).map_err(|e| e.to_string())?;
    ensure(written.len() == goldens.len(), || format!("{} files written", written.len()))?;
    for (name, golden) in goldens {
        let got = std::fs::read(dir.path().join(name)).map_err(|e| format!("{name}: {e}"))?;
        ensure(got == golden.as_bytes(), || format!("{name} differs from golden"))?;
    }
    let report = build_report().map_err(|e| e.to_string())?;
    ensure(report.discrepancies.len() == 4, || format!("{} discrepancies", report.discrepancies.len()))?;
    Ok(())
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("1 slope-intercept table reproduction", slope_table),
        ("2 general-form table reproduction", general_form_table),
        ("3 lagrange blocks and printed-polynomial check", lagrange_blocks),
        ("4 alphabet codes of the phrase", alphabet_codes),
        ("5 randomized round trips for every scheme", round_trips),
        ("6 degenerate input handling", degenerate_inputs),
        ("7 dimension bound", dimension_bound),
        ("8 expansion ratios", expansion),
        ("9 container fixpoint and golden report", container),
    ];
    let mut failed = Vec::new();
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let ms = started.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  {name} ({ms} ms)"),
            Err(why) => {
                println!("FAIL  {name} ({ms} ms): {why}");
                failed.push(name);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
