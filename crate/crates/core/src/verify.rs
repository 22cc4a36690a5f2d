//! Exhaustive verification suites, one per family of identities.
//!
//! Each suite produces a list of [`Check`]s. Per-poset suites run on each
//! corpus entry independently, so callers may parallelize over entries.

use std::collections::HashSet;

use serde::Serialize;

use crate::corpus::Entry;
use crate::error::{Error, Result};
use crate::hecke;
use crate::poset::{LinearExtension, Poset, Shape};
use crate::promo::{self, words, ExtensionSet};
use crate::sieve::{self, SpecialKind};
use crate::slender::{self, ChainSpace, ChainVector, GradedPoset};
use crate::stats;

/// One verified claim about one subject.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub subject: String,
    pub claim: String,
    pub detail: String,
    pub pass: bool,
}

fn check(suite: &'static str, subject: &str, claim: &str, pass: bool, detail: String) -> Check {
    Check {
        suite,
        subject: subject.to_string(),
        claim: claim.to_string(),
        detail,
        pass,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
    Thm7,
    Thm8,
    Thm9,
    Lemma1,
    Lemma2,
    Eq7,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::Thm1,
        SuiteId::Thm2,
        SuiteId::Thm3,
        SuiteId::Thm4,
        SuiteId::Thm5,
        SuiteId::Thm6,
        SuiteId::Thm7,
        SuiteId::Thm8,
        SuiteId::Thm9,
        SuiteId::Lemma1,
        SuiteId::Lemma2,
        SuiteId::Eq7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Thm1 => "thm1",
            SuiteId::Thm2 => "thm2",
            SuiteId::Thm3 => "thm3",
            SuiteId::Thm4 => "thm4",
            SuiteId::Thm5 => "thm5",
            SuiteId::Thm6 => "thm6",
            SuiteId::Thm7 => "thm7",
            SuiteId::Thm8 => "thm8",
            SuiteId::Thm9 => "thm9",
            SuiteId::Lemma1 => "lemma1",
            SuiteId::Lemma2 => "lemma2",
            SuiteId::Eq7 => "eq7",
        }
    }

    pub fn from_name(s: &str) -> Option<SuiteId> {
        SuiteId::ALL.into_iter().find(|id| id.name() == s)
    }

    /// Suites that iterate over a poset corpus.
    pub fn is_per_poset(self) -> bool {
        !matches!(self, SuiteId::Thm6 | SuiteId::Thm7 | SuiteId::Thm8 | SuiteId::Thm9)
    }
}

/// Scale knobs shared by every suite.
#[derive(Clone, Debug)]
pub struct Config {
    pub extension_cap: usize,
    /// entries with more elements are skipped
    pub max_size: usize,
    /// largest `n` for the Hecke suites
    pub hecke_n: usize,
    pub hecke_cap: usize,
    /// judge statements exactly as printed rather than in corrected form
    pub literal: bool,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            extension_cap: promo::DEFAULT_EXTENSION_CAP,
            max_size: 8,
            hecke_n: 5,
            hecke_cap: hecke::DEFAULT_HECKE_CAP,
            literal: false,
        }
    }
}

/// Operator identities on `𝓛(P)` as permutations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvacuationIdentities {
    pub extensions: usize,
    /// `ε² = id`
    pub evacuation_involution: bool,
    /// `∂^p = εε*`
    pub promotion_power: bool,
    /// `∂ε = ε∂⁻¹`
    pub conjugation: bool,
}

impl EvacuationIdentities {
    pub fn pass(&self) -> bool {
        self.evacuation_involution && self.promotion_power && self.conjugation
    }
}

pub fn evacuation_identities(p: &Poset, cap: usize) -> Result<EvacuationIdentities> {
    let set = ExtensionSet::new(p, cap)?;
    let eps = set.permutation(|f| promo::evacuate(p, f));
    let eps_star = set.permutation(|f| promo::dual_evacuate(p, f));
    let del = set.permutation(|f| promo::promote_slide(p, f).0);
    let del_p = (0..p.size()).fold((0..set.len()).collect::<Vec<_>>(), |acc, _| promo::then(&acc, &del));
    Ok(EvacuationIdentities {
        extensions: set.len(),
        evacuation_involution: promo::is_identity(&promo::then(&eps, &eps)),
        promotion_power: del_p == promo::then(&eps, &eps_star),
        conjugation: promo::then(&del, &eps) == promo::then(&eps, &promo::inverse(&del)),
    })
}

/// The word operators against the sliding definitions, plus the monoid
/// relations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PromotionRoutes {
    pub promote_slide_eq_word: bool,
    pub promote_blocks_eq_word: bool,
    pub dual_promote_is_inverse: bool,
    pub evacuate_eq_word: bool,
    pub dual_evacuate_routes_agree: bool,
    /// `τ_i² = 1`, `τ_iτ_j = τ_jτ_i` for `|i-j| > 1`, `(τ_iτ_{i+1})⁶ = 1`
    pub tau_relations: bool,
    /// `γ² = 1`, `δ^p = γγ*`, `δγ = γδ⁻¹` as word operators
    pub word_identities: bool,
}

impl PromotionRoutes {
    pub fn pass(&self) -> bool {
        self.promote_slide_eq_word
            && self.promote_blocks_eq_word
            && self.dual_promote_is_inverse
            && self.evacuate_eq_word
            && self.dual_evacuate_routes_agree
            && self.tau_relations
            && self.word_identities
    }
}

pub fn promotion_routes(p: &Poset, cap: usize) -> Result<PromotionRoutes> {
    let n = p.size();
    let set = ExtensionSet::new(p, cap)?;
    let exts = set.extensions();
    let all = |f: &dyn Fn(&LinearExtension) -> bool| exts.iter().all(f);
    let id: Vec<usize> = (0..set.len()).collect();
    let taus: Vec<Vec<usize>> = (1..n).map(|i| set.word_permutation(p, &[i])).collect();
    let mut tau_relations = true;
    for i in 0..taus.len() {
        tau_relations &= promo::is_identity(&promo::then(&taus[i], &taus[i]));
        for j in i + 2..taus.len() {
            tau_relations &= promo::then(&taus[i], &taus[j]) == promo::then(&taus[j], &taus[i]);
        }
        if i + 1 < taus.len() {
            let pair = promo::then(&taus[i], &taus[i + 1]);
            let six = (0..6).fold(id.clone(), |acc, _| promo::then(&acc, &pair));
            tau_relations &= promo::is_identity(&six);
        }
    }
    let gamma = set.word_permutation(p, &words::gamma(n));
    let gamma_star = set.word_permutation(p, &words::gamma_star(n));
    let delta = set.word_permutation(p, &words::delta(n));
    let delta_p = set.word_permutation(p, &words::power(&words::delta(n), n));
    let word_identities = promo::is_identity(&promo::then(&gamma, &gamma))
        && delta_p == promo::then(&gamma, &gamma_star)
        && promo::then(&delta, &gamma) == promo::then(&gamma, &promo::inverse(&delta));
    Ok(PromotionRoutes {
        promote_slide_eq_word: all(&|f| promo::promote_slide(p, f).0 == promo::promote_word(p, f)),
        promote_blocks_eq_word: all(&|f| promo::promote_blocks(p, f) == promo::promote_word(p, f)),
        dual_promote_is_inverse: all(&|f| promo::dual_promote(p, &promo::promote(p, f)) == *f
            && promo::dual_promote(p, f) == promo::dual_promote_word(p, f)),
        evacuate_eq_word: all(&|f| promo::evacuate(p, f) == promo::evacuate_word(p, f)),
        dual_evacuate_routes_agree: all(&|f| promo::dual_evacuate(p, f) == promo::dual_evacuate_word(p, f)),
        tau_relations,
        word_identities,
    })
}

/// First `f` with `trajectory(fε) ≠ principal_chain(f)`.
pub fn trajectory_counterexample(p: &Poset, cap: usize) -> Result<Option<LinearExtension>> {
    Ok(p
        .linear_extensions_capped(cap)?
        .into_iter()
        .find(|f| promo::trajectory(p, &promo::evacuate(p, f)) != promo::principal_chain(p, f)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CuttingAntichains {
    pub extensions: String,
    /// antichains meeting every maximal chain
    pub antichains: usize,
    pub failures: Vec<Vec<usize>>,
}

/// Antichains with at most 20 elements are searched exhaustively.
pub fn cutting_antichains(p: &Poset) -> Result<CuttingAntichains> {
    let n = p.size();
    if n > 20 {
        return Err(Error::CapExceeded {
            what: "antichain search size",
            cap: 20,
        });
    }
    let total = p.count_extensions();
    let mut antichains = 0;
    let mut failures = Vec::new();
    for mask in 1u32..1 << n {
        let set: Vec<usize> = (0..n).filter(|&t| mask >> t & 1 == 1).collect();
        if !p.is_antichain(&set) || !p.antichain_cuts_all_chains(&set) {
            continue;
        }
        antichains += 1;
        let sum: num_bigint::BigUint = set.iter().map(|&t| p.remove(t).count_extensions()).sum();
        if sum != total {
            failures.push(set);
        }
    }
    Ok(CuttingAntichains {
        extensions: total.to_string(),
        antichains,
        failures,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfEvacuationBijection {
    pub counts: stats::SelfEvacuationCounts,
    /// `w ↦ w̃` maps dual domino extensions bijectively onto the
    /// self-evacuating ones
    pub bijection: bool,
}

impl SelfEvacuationBijection {
    pub fn pass(&self) -> bool {
        self.counts.all_equal() && self.bijection
    }
}

pub fn self_evacuation_bijection(p: &Poset, cap: usize) -> Result<SelfEvacuationBijection> {
    let counts = stats::self_evacuation_counts(p, cap)?;
    let selfev: HashSet<LinearExtension> = stats::self_evacuating(p, cap)?.into_iter().collect();
    let mut image = HashSet::new();
    let mut ok = true;
    for d in stats::dual_domino_tableaux(p) {
        let w = stats::domino_to_selfevac(p, &d.extension())?;
        ok &= selfev.contains(&w) && image.insert(w);
    }
    Ok(SelfEvacuationBijection {
        bijection: ok && image.len() == selfev.len(),
        counts,
    })
}

/// `f∂^p = f` for every extension.
pub fn promotion_power_is_identity(p: &Poset, cap: usize) -> Result<bool> {
    let set = ExtensionSet::new(p, cap)?;
    let perm = set.word_permutation(p, &words::power(&words::delta(p.size()), p.size()));
    Ok(promo::is_identity(&perm))
}

/// `τ_i² = 1` and distant commutation for the linear chain operators
/// on every basis chain.
pub fn chain_tau_relations(g: &GradedPoset, cap: usize) -> Result<bool> {
    let space = ChainSpace::new(g, cap)?;
    let r = g.rank();
    for id in 0..space.len() {
        let v = ChainVector::basis(id);
        for i in 1..r {
            if space.linear_word(&v, &[i, i])? != v {
                return Ok(false);
            }
            for j in i + 2..r {
                if space.linear_word(&v, &[i, j])? != space.linear_word(&v, &[j, i])? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `(T_i + 1)(T_i - q) = 0` for `T_i ↦ Σ_{N_i}` on `B_n(q)`.
pub fn hecke_quadratic_on_flags(n: usize, q: usize) -> Result<bool> {
    let lat = slender::subspace_lattice(n, q)?;
    let space = ChainSpace::new(lat.graded(), slender::DEFAULT_CHAIN_CAP)?;
    let qr = crate::qpoly::Rat::from_integer(q.into());
    for id in 0..space.len() {
        let v = ChainVector::basis(id);
        for i in 1..n {
            let t = space.hecke_t(&v, i)?;
            let tt = space.hecke_t(&t, i)?;
            let lhs = tt.add(&t).sub(&t.scale(&qr)).sub(&v.scale(&qr));
            if !lhs.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Runs a per-poset suite on one entry. Entries above `max_size` yield no
/// checks.
pub fn run_entry(id: SuiteId, e: &Entry, cfg: &Config) -> Result<Vec<Check>> {
    let p = e.poset();
    if p.size() > cfg.max_size {
        return Ok(Vec::new());
    }
    let cap = cfg.extension_cap;
    let name = e.name.as_str();
    let s = id.name();
    Ok(match id {
        SuiteId::Thm1 => {
            let r = evacuation_identities(&p, cap)?;
            vec![
                check(s, name, "ε² = id", r.evacuation_involution, format!("{} extensions", r.extensions)),
                check(s, name, "∂^p = εε*", r.promotion_power, String::new()),
                check(s, name, "∂ε = ε∂⁻¹", r.conjugation, String::new()),
            ]
        }
        SuiteId::Lemma1 => {
            let r = promotion_routes(&p, cap)?;
            vec![
                check(s, name, "sliding ∂ = δ", r.promote_slide_eq_word, String::new()),
                check(s, name, "block rotation = δ", r.promote_blocks_eq_word, String::new()),
                check(s, name, "∂* = ∂⁻¹ = δ⁻¹", r.dual_promote_is_inverse, String::new()),
                check(s, name, "freezing ε = γ", r.evacuate_eq_word, String::new()),
                check(s, name, "ε* via dual = γ*", r.dual_evacuate_routes_agree, String::new()),
                check(s, name, "τ relations", r.tau_relations, String::new()),
                check(s, name, "γ² = 1, δ^p = γγ*, δγ = γδ⁻¹", r.word_identities, String::new()),
            ]
        }
        SuiteId::Thm2 => {
            let bad = trajectory_counterexample(&p, cap)?;
            let detail = bad.as_ref().map_or_else(String::new, |f| format!("counterexample {f}"));
            vec![check(s, name, "trajectory(fε) = principal_chain(f)", bad.is_none(), detail)]
        }
        SuiteId::Thm3 => {
            let r = cutting_antichains(&p)?;
            vec![check(
                s,
                name,
                "e(P) = Σ_{t∈A} e(P−t)",
                r.failures.is_empty(),
                format!("e(P) = {}, {} cutting antichains, failures {:?}", r.extensions, r.antichains, r.failures),
            )]
        }
        SuiteId::Thm4 => {
            let r = stats::sign_balance_report(&p, cap)?;
            let b_form = if cfg.literal { r.ideal_parity_literal } else { r.ideal_parity_applies };
            let detail = format!(
                "even {} odd {}; (a) {}; (b) printed {}, corrected {}",
                r.even, r.odd, r.chain_parity_applies, r.ideal_parity_literal, r.ideal_parity_applies
            );
            vec![
                check(s, name, "(a) ⇒ balanced", !r.chain_parity_applies || r.balanced, detail.clone()),
                check(s, name, "(b) ⇒ balanced", !b_form || r.balanced, detail),
            ]
        }
        SuiteId::Thm5 => {
            let r = self_evacuation_bijection(&p, cap)?;
            let c = &r.counts;
            vec![
                check(
                    s,
                    name,
                    "W′(−1) = #dual domino = #self-evacuating",
                    c.all_equal(),
                    format!("{} / {} / {}", c.wprime_at_minus_one, c.dual_domino_tableaux, c.self_evacuating),
                ),
                check(s, name, "w ↦ w̃ is a bijection", r.bijection, String::new()),
            ]
        }
        SuiteId::Lemma2 => {
            let bad = stats::check_lemma2(&p, cap)?;
            let detail = bad
                .as_ref()
                .map_or_else(String::new, |(j, u, v)| format!("j={j} u={u} v={v}"));
            vec![check(s, name, "δ*-word exchange", bad.is_none(), detail)]
        }
        SuiteId::Eq7 => match GradedPoset::new(p.clone()) {
            Ok(g) => {
                let mut out = vec![check(s, name, "τ_i² = 1, distant commutation", chain_tau_relations(&g, cap)?, String::new())];
                if g.is_slender() {
                    let rep = slender::slender_report(&g, cap)?;
                    out.push(check(
                        s,
                        name,
                        "#self-evacuating chains = #dual domino chains",
                        rep.pass(),
                        format!("{:?} / {}", rep.self_evacuating_chains, rep.dual_domino_chains),
                    ));
                }
                out
            }
            Err(_) => Vec::new(),
        },
        SuiteId::Thm6 | SuiteId::Thm7 | SuiteId::Thm8 | SuiteId::Thm9 => {
            return Err(Error::Precondition(format!("{s} is not a per-poset suite")))
        }
    })
}

/// Shapes for the special-shape suite, with the family each is checked
/// against.
pub fn special_shapes() -> Vec<(Shape, Option<SpecialKind>)> {
    let sh = |rows: &[usize], shifted| Shape::new(rows.to_vec(), shifted).expect("shape");
    vec![
        (Shape::rectangle(2, 2), Some(SpecialKind::Rectangle)),
        (Shape::rectangle(2, 3), Some(SpecialKind::Rectangle)),
        (Shape::rectangle(2, 4), Some(SpecialKind::Rectangle)),
        (Shape::rectangle(3, 3), Some(SpecialKind::Rectangle)),
        (Shape::rectangle(3, 4), Some(SpecialKind::Rectangle)),
        (Shape::staircase(2), Some(SpecialKind::Staircase)),
        (Shape::staircase(3), Some(SpecialKind::Staircase)),
        (sh(&[2, 1], true), Some(SpecialKind::ShiftedDoubleStaircase)),
        (sh(&[3, 1], true), Some(SpecialKind::ShiftedTrapezoid)),
        (sh(&[3, 2], true), None),
        (sh(&[4, 2], true), Some(SpecialKind::ShiftedDoubleStaircase)),
    ]
}

/// Rectangles for the sieving check.
pub const SIEVE_RECTANGLES: [(usize, usize); 6] = [(2, 2), (2, 3), (2, 4), (2, 5), (3, 3), (3, 4)];

/// Runs a suite that does not iterate over the corpus.
pub fn run_global(id: SuiteId, cfg: &Config) -> Result<Vec<Check>> {
    let s = id.name();
    let cap = cfg.extension_cap;
    let mut out = Vec::new();
    match id {
        SuiteId::Thm6 => {
            for (shape, kind) in special_shapes() {
                let subject = shape.to_string();
                match kind {
                    Some(kind) => {
                        let r = sieve::special_shape_check(&shape, kind, cap)?;
                        out.push(check(
                            s,
                            &subject,
                            kind.name(),
                            r.pass(),
                            format!(
                                "∂^p ok {}, ε formula {:?}, dihedral {} (claimed {})",
                                r.promotion_power_ok, r.evacuation_formula_ok, r.dihedral_order, r.expected_dihedral_order
                            ),
                        ));
                    }
                    None => {
                        let ok = promotion_power_is_identity(&shape.poset(), cap)?;
                        out.push(check(s, &subject, "∂^p = id", ok, "in neither shifted family".into()));
                    }
                }
            }
        }
        SuiteId::Thm7 => {
            for (m, n) in SIEVE_RECTANGLES {
                let r = sieve::rectangle_sieve(m, n, cap)?;
                let pass = if cfg.literal { r.pass() } else { r.normalized_pass() };
                out.push(check(
                    s,
                    &format!("{m}x{n}"),
                    "e_d = F(ζ^d) for d = 1..p",
                    pass,
                    format!("printed F fails at d ∈ {:?}; q^{{-{}}}F passes: {}", r.failures(), r.shift, r.normalized_pass()),
                ));
            }
        }
        SuiteId::Thm8 => {
            for n in 2..=cfg.hecke_n {
                let r = hecke::check_identity_coefficient(n, cfg.hecke_cap)?;
                out.push(check(s, &format!("n={n}"), "c_id = ((q-1)/(q+1))^⌊n/2⌋", r.pass, r.actual));
            }
        }
        SuiteId::Thm9 => {
            for n in 2..=cfg.hecke_n {
                let r = hecke::check_divisibility(n, cfg.hecke_cap)?;
                let tight = r.rows.iter().filter(|row| row.tight).count();
                out.push(check(
                    s,
                    &format!("n={n}"),
                    "(q-1)^{n-κ(ŵ)} | c_w",
                    r.pass() && r.denominators_are_q_plus_1_powers,
                    format!("{} of {} bounds tight", tight, r.rows.len()),
                ));
            }
        }
        _ => return Err(Error::Precondition(format!("{s} is a per-poset suite"))),
    }
    Ok(out)
}

/// Global checks appended to the chain-operator suite: the Hecke relation and
/// cell consistency on small flag lattices.
pub fn flag_lattice_checks(cfg: &Config) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        let subject = format!("B_{n}({q})");
        out.push(check("eq7", &subject, "(T_i+1)(T_i-q) = 0", hecke_quadratic_on_flags(n, q)?, String::new()));
        let r = slender::hecke_consistency(n, q, cfg.hecke_cap)?;
        out.push(check(
            "eq7",
            &subject,
            "𝔪₀ε = Σ c_w(q) Σ_{Ω_w} 𝔪",
            r.pass(),
            format!("{} flags", r.flags),
        ));
    }
    Ok(out)
}

/// Runs a whole suite sequentially over `entries`.
pub fn run(id: SuiteId, entries: &[Entry], cfg: &Config) -> Result<Vec<Check>> {
    if !id.is_per_poset() {
        return run_global(id, cfg);
    }
    let mut out = Vec::new();
    for e in entries {
        out.extend(run_entry(id, e, cfg)?);
    }
    if id == SuiteId::Eq7 {
        out.extend(flag_lattice_checks(cfg)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn small() -> Config {
        Config {
            max_size: 6,
            hecke_n: 4,
            ..Config::default()
        }
    }

    #[test]
    fn names_round_trip() {
        for id in SuiteId::ALL {
            assert_eq!(SuiteId::from_name(id.name()), Some(id));
        }
        assert_eq!(SuiteId::from_name("thm10"), None);
    }

    #[test]
    fn per_poset_suites_pass_on_small_corpus() {
        let entries = corpus::up_to(6);
        for id in [SuiteId::Thm1, SuiteId::Lemma1, SuiteId::Thm2, SuiteId::Thm3, SuiteId::Thm5, SuiteId::Lemma2, SuiteId::Eq7] {
            let checks = run(id, &entries, &small()).unwrap();
            assert!(!checks.is_empty());
            let bad: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
            assert!(bad.is_empty(), "{bad:?}");
        }
    }

    #[test]
    fn sign_balance_literal_versus_corrected() {
        let entries = corpus::up_to(6);
        let corrected = run(SuiteId::Thm4, &entries, &small()).unwrap();
        assert!(corrected.iter().all(|c| c.pass));
        let literal = run(SuiteId::Thm4, &entries, &Config { literal: true, ..small() }).unwrap();
        assert!(literal.iter().any(|c| !c.pass && c.subject == "chain-2"));
    }

    #[test]
    fn cutting_antichains_on_a_vee() {
        let r = cutting_antichains(&corpus::standard()[13].poset()).unwrap();
        assert_eq!(r.extensions, "2");
        assert!(r.failures.is_empty() && r.antichains >= 1);
    }

    #[test]
    fn hecke_suites() {
        let cfg = small();
        assert!(run(SuiteId::Thm8, &[], &cfg).unwrap().iter().all(|c| c.pass));
        assert!(run(SuiteId::Thm9, &[], &cfg).unwrap().iter().all(|c| c.pass));
        assert!(run_entry(SuiteId::Thm8, &corpus::standard()[0], &cfg).is_err());
    }
}
