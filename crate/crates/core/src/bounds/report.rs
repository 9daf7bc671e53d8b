use std::fmt;

use serde::Serialize;

use super::*;
use crate::graph::{chromatic_number, is_planar, to_graph6, Graph};
use crate::spectra::{eigenvalues, exact_determinant, ExactDet, Spectrum};

/// Sufficient condition whose hypotheses a graph satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CoverageLabel {
    /// k-regular: `k` divides `det A`.
    Regular,
    /// Largest eigenvalue at most 7.11.
    Lambda711,
    /// At most `2.574 n` edges.
    Density2574,
    Bipartite,
    /// Average degree at most `n - 2 ln n - 3`.
    AvgDegGap,
    Planar,
    /// Chromatic number 3 outside the unresolved eigenvalue window.
    Chromatic3,
    GoldenCondition,
    /// The variance bound's `C` is at least 1.
    CgeOne,
    Uncovered,
}

impl CoverageLabel {
    pub const ALL: [CoverageLabel; 10] = [
        CoverageLabel::Regular,
        CoverageLabel::Lambda711,
        CoverageLabel::Density2574,
        CoverageLabel::Bipartite,
        CoverageLabel::AvgDegGap,
        CoverageLabel::Planar,
        CoverageLabel::Chromatic3,
        CoverageLabel::GoldenCondition,
        CoverageLabel::CgeOne,
        CoverageLabel::Uncovered,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CoverageLabel::Regular => "Regular",
            CoverageLabel::Lambda711 => "Lambda711",
            CoverageLabel::Density2574 => "Density2574",
            CoverageLabel::Bipartite => "Bipartite",
            CoverageLabel::AvgDegGap => "AvgDegGap",
            CoverageLabel::Planar => "Planar",
            CoverageLabel::Chromatic3 => "Chromatic3",
            CoverageLabel::GoldenCondition => "GoldenCondition",
            CoverageLabel::CgeOne => "CgeOne",
            CoverageLabel::Uncovered => "Uncovered",
        }
    }
}

impl fmt::Display for CoverageLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Every sufficient condition that holds for a non-singular graph of order at
/// least 5. All predicates are evaluated; an empty result is reported as
/// `[Uncovered]`.
pub fn classify(g: &Graph, spectrum: &Spectrum, det: &ExactDet, profile: &DegreeProfile) -> Result<Vec<CoverageLabel>> {
    let n = g.order();
    if det.is_zero() {
        return Err(Error::Inapplicable("classification needs a non-singular graph"));
    }
    if n < 5 {
        return Err(Error::Inapplicable("classification needs order at least 5"));
    }
    let m = profile.size;
    let avg = profile.avg_degree_f64();
    let absdet = det.abs_f64();
    let mut labels = Vec::new();

    if matches!(g.regular_degree(), Some(k) if k >= 1) {
        labels.push(CoverageLabel::Regular);
    }
    if cond_density(n, m) {
        labels.push(CoverageLabel::Density2574);
    }
    if g.is_bipartite() {
        labels.push(CoverageLabel::Bipartite);
    }
    if cond_lambda711(spectrum.mu1, n) {
        labels.push(CoverageLabel::Lambda711);
    }
    if cond_avgdeg_gap(n, avg) {
        labels.push(CoverageLabel::AvgDegGap);
    }
    if cond_golden(n, m, spectrum.mu1, spectrum.mu2, avg) {
        labels.push(CoverageLabel::GoldenCondition);
    }
    if quantity_c(n, m, spectrum.mu1, spectrum.mu2, absdet)? >= 1.0 - CONDITION_TOLERANCE {
        labels.push(CoverageLabel::CgeOne);
    }
    if cond_chromatic3(chromatic_number(g)?, spectrum.mu1, n) {
        labels.push(CoverageLabel::Chromatic3);
    }
    if is_planar(g) {
        labels.push(CoverageLabel::Planar);
    }

    labels.sort();
    if labels.is_empty() {
        labels.push(CoverageLabel::Uncovered);
    }
    Ok(labels)
}

/// All bounds, targets, verdicts and coverage for one graph.
#[derive(Clone, Debug)]
pub struct BoundReport {
    pub graph6: String,
    pub profile: DegreeProfile,
    pub det: ExactDet,
    pub spectrum: Spectrum,
    pub bound_log: Option<f64>,
    pub bound_amgm: Option<f64>,
    pub bound_variance: Option<f64>,
    pub quantity_c: Option<f64>,
    /// Present only when `C <= 1`.
    pub bound_conjugate: Option<f64>,
    pub conjecture1_target: f64,
    pub conjecture2_target: f64,
    pub conjecture1: Verdict,
    pub conjecture2: Verdict,
    /// `None` for singular graphs and orders below 5.
    pub coverage: Option<Vec<CoverageLabel>>,
}

impl BoundReport {
    pub fn from_graph(g: &Graph) -> Result<BoundReport> {
        let spectrum = eigenvalues(g)?;
        let det = exact_determinant(g);
        Self::from_parts(g, spectrum, det)
    }

    pub fn from_parts(g: &Graph, spectrum: Spectrum, det: ExactDet) -> Result<BoundReport> {
        let profile = g.degree_profile();
        let n = g.order();
        let m = profile.size;
        let nonsingular = !det.is_zero();
        let absdet = det.abs_f64();
        let (mu1, mu2) = (spectrum.mu1, spectrum.mu2);

        let (mut bound_log_v, mut bound_amgm_v, mut bound_variance_v, mut c, mut conj) = (None, None, None, None, None);
        if nonsingular {
            bound_log_v = Some(bound_log(n, mu1, absdet)?);
            bound_amgm_v = Some(bound_amgm(n, mu1, absdet)?);
            let cv = quantity_c(n, m, mu1, mu2, absdet)?;
            c = Some(cv);
            bound_variance_v = Some(bound_variance(n, m, mu1, mu2, absdet)?);
            conj = bound_conjugate(n, m, mu1, mu2, absdet).ok();
        }
        let coverage = if nonsingular && n >= 5 { Some(classify(g, &spectrum, &det, &profile)?) } else { None };

        Ok(BoundReport {
            graph6: to_graph6(g)?,
            conjecture1_target: conjecture1_target(&profile),
            conjecture2_target: conjecture2_target(&profile),
            conjecture1: conjecture1_check(nonsingular, spectrum.energy, &profile),
            conjecture2: conjecture2_check(nonsingular, spectrum.energy, &profile),
            profile,
            det,
            spectrum,
            bound_log: bound_log_v,
            bound_amgm: bound_amgm_v,
            bound_variance: bound_variance_v,
            quantity_c: c,
            bound_conjugate: conj,
            coverage,
        })
    }

    pub fn nonsingular(&self) -> bool {
        !self.det.is_zero()
    }

    pub fn energy(&self) -> f64 {
        self.spectrum.energy
    }

    /// `energy - (n - 1 + avg_degree)`.
    pub fn conjecture2_margin(&self) -> f64 {
        self.spectrum.energy - self.conjecture2_target
    }
}
