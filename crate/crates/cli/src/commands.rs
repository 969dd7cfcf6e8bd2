use std::fmt::Write as _;

use serde::Serialize;

use pillowcase_core::alexander::{
    kernels_distinct, litherland_sum, presentation_matrix, BlanchfieldForm, KernelsRecord,
    ModulePresentation, ModuleVector, SeifertData,
};
use pillowcase_core::obstruction::{
    kernel_distinctness_certificate, obstruct_triviality_with, KernelCertificateRecord,
    ObstructionRecord,
};
use pillowcase_core::slopes::{
    epsilon_sequence, grid_walk, omega_word, slope_relator, SignSequence,
};
use pillowcase_core::verify::{run_all, Status, VerifyConfig, VerifyReport, PUBLISHED_OMEGA_10_7};
use pillowcase_core::{GroupWord, SlopeParam};

use crate::args::{
    BlanchfieldArgs, KernelsArgs, NamedKnot, ObstructArgs, SatelliteArgs, SlopeWordArgs, VerifyArgs,
};

/// What a subcommand produced: a serializable payload, its text rendering
/// and whether its internal checks held.
pub struct Outcome {
    pub json: serde_json::Value,
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn new<T: Serialize>(payload: &T, text: String, ok: bool) -> Self {
        Outcome {
            json: serde_json::to_value(payload).expect("payload serializes"),
            text,
            ok,
        }
    }
}

#[derive(Serialize)]
struct OracleBlock {
    signs: SignSequence,
    word: String,
    vertical_crossings: usize,
    multiset_agreement: bool,
    sequence_agreement: bool,
    mismatches: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    published: Option<PublishedBlock>,
}

#[derive(Serialize)]
struct PublishedBlock {
    word: String,
    signs: SignSequence,
    status: Status,
    mismatches: Vec<usize>,
}

#[derive(Serialize)]
struct SlopeWordReport {
    slope: SlopeParam,
    epsilon: SignSequence,
    omega: String,
    relator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<OracleBlock>,
}

pub fn slope_word(a: &SlopeWordArgs) -> Outcome {
    let s = a.slope;
    let eps = epsilon_sequence(s);
    let oracle = a.oracle.then(|| {
        let walk = grid_walk(s);
        let signs = walk.signs();
        let published = (s.c() == 10 && s.d() == 7).then(|| {
            let word: GroupWord = PUBLISHED_OMEGA_10_7.parse().expect("well-formed word");
            let psigns = SignSequence::from_word(&word);
            PublishedBlock {
                status: if word == omega_word(s) {
                    Status::Pass
                } else {
                    Status::Warn
                },
                mismatches: eps.mismatches(&psigns),
                word: word.to_string(),
                signs: psigns,
            }
        });
        OracleBlock {
            multiset_agreement: signs.counts() == eps.counts(),
            sequence_agreement: signs == eps,
            mismatches: signs.mismatches(&eps),
            word: walk.word().to_string(),
            vertical_crossings: walk.vertical_crossings,
            signs,
            published,
        }
    });
    let report = SlopeWordReport {
        slope: s,
        epsilon: eps,
        omega: omega_word(s).to_string(),
        relator: slope_relator(s).to_string(),
        oracle,
    };
    let mut t = String::new();
    writeln!(t, "slope    {}", report.slope).unwrap();
    writeln!(t, "epsilon  {}", report.epsilon).unwrap();
    writeln!(t, "omega    {}", report.omega).unwrap();
    writeln!(t, "relator  {}", report.relator).unwrap();
    let mut ok = true;
    if let Some(o) = &report.oracle {
        ok = o.multiset_agreement;
        writeln!(t, "oracle").unwrap();
        writeln!(t, "  signs               {}", o.signs).unwrap();
        writeln!(t, "  word                {}", o.word).unwrap();
        writeln!(t, "  vertical crossings  {}", o.vertical_crossings).unwrap();
        writeln!(t, "  multiset agreement  {}", o.multiset_agreement).unwrap();
        writeln!(t, "  sequence agreement  {}", o.sequence_agreement).unwrap();
        writeln!(t, "  mismatches          {:?}", o.mismatches).unwrap();
        if let Some(p) = &o.published {
            writeln!(t, "  published word      {} ({})", p.word, p.signs).unwrap();
            writeln!(
                t,
                "  published status    {} (differs at {:?})",
                p.status, p.mismatches
            )
            .unwrap();
        }
    }
    Outcome::new(&report, t, ok)
}

#[derive(Serialize)]
struct ObstructReport {
    report: ObstructionRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    kernels: Option<KernelCertificateRecord>,
}

pub fn obstruct(a: &ObstructArgs) -> Outcome {
    let r = obstruct_triviality_with(a.slope, &a.pq, a.convention.into());
    let ok = r.check_invariants().is_ok();
    let cert = a
        .against
        .map(|s2| kernel_distinctness_certificate(a.slope, s2, &a.pq));
    let mut t = format!("{r}\n");
    if let Some(c) = &cert {
        writeln!(
            t,
            "kernel comparison {} vs {}: {:?}",
            c.first.slope, c.second.slope, c.verdict
        )
        .unwrap();
        writeln!(
            t,
            "requires external diffeomorphism: {}",
            c.requires_external_diffeomorphism
        )
        .unwrap();
    }
    let payload = ObstructReport {
        report: r.record(),
        kernels: cert.map(|c| c.record()),
    };
    Outcome::new(&payload, t, ok)
}

pub fn kernels(a: &KernelsArgs) -> Outcome {
    let c = kernels_distinct(a.k1, a.k2);
    let ok = c.consistent() && c.distinct() == (a.k1 != a.k2);
    let r: KernelsRecord = c.record();
    let mut t = String::new();
    writeln!(t, "w_{}           {}", r.k1, r.w_k1).unwrap();
    writeln!(t, "w_{}           {}", r.k2, r.w_k2).unwrap();
    writeln!(
        t,
        "difference    {}  (second coordinate {})",
        r.difference, r.difference_compact
    )
    .unwrap();
    writeln!(t, "c^2+cd+d^2    {}", r.quadratic_coefficient).unwrap();
    writeln!(t, "Bl((0,1),(0,1)) = {}", r.unit_pairing).unwrap();
    writeln!(t, "self-pairing  {}", r.self_pairing).unwrap();
    writeln!(t, "line det      {}", r.line_determinant).unwrap();
    writeln!(t, "pairing route {}", r.pairing_route).unwrap();
    writeln!(t, "line route    {}", r.line_route).unwrap();
    writeln!(
        t,
        "verdict       {}",
        if r.distinct { "distinct" } else { "equal" }
    )
    .unwrap();
    Outcome::new(&r, t, ok)
}

#[derive(Serialize)]
struct BlanchfieldReport {
    x: ModuleVector,
    y: ModuleVector,
    value: String,
    value_swapped: String,
    hermitian: bool,
}

pub fn blanchfield(a: &BlanchfieldArgs) -> Outcome {
    let form = BlanchfieldForm::square_knot();
    let v = form.pair_module(&a.x, &a.y).expect("rank 4 form");
    let w = form.pair_module(&a.y, &a.x).expect("rank 4 form");
    let report = BlanchfieldReport {
        x: a.x.clone(),
        y: a.y.clone(),
        value: v.to_string(),
        value_swapped: w.to_string(),
        hermitian: v == w.conjugate(),
    };
    let mut t = String::new();
    writeln!(t, "x         {}", report.x).unwrap();
    writeln!(t, "y         {}", report.y).unwrap();
    writeln!(t, "Bl(x, y)  {}", report.value).unwrap();
    writeln!(t, "Bl(y, x)  {}", report.value_swapped).unwrap();
    writeln!(t, "hermitian {}", report.hermitian).unwrap();
    let ok = report.hermitian;
    Outcome::new(&report, t, ok)
}

fn named(k: NamedKnot) -> ModulePresentation {
    match k {
        NamedKnot::Unknot => ModulePresentation::trivial(),
        NamedKnot::Trefoil => presentation_matrix(&SeifertData::trefoil()),
        NamedKnot::MirrorTrefoil => presentation_matrix(&SeifertData::mirror_trefoil()),
        NamedKnot::SquareKnot => presentation_matrix(&SeifertData::square_knot()),
    }
}

fn knot_name(k: NamedKnot) -> &'static str {
    match k {
        NamedKnot::Unknot => "unknot",
        NamedKnot::Trefoil => "trefoil",
        NamedKnot::MirrorTrefoil => "mirror-trefoil",
        NamedKnot::SquareKnot => "square-knot",
    }
}

#[derive(Serialize)]
struct SatelliteReport {
    pattern: &'static str,
    companion: &'static str,
    winding: i64,
    presentation: ModulePresentation,
    order_ideal: String,
    expected_order_ideal: String,
    matches: bool,
}

pub fn satellite(a: &SatelliteArgs) -> Result<Outcome, String> {
    let pattern = named(a.pattern);
    let companion = named(a.companion);
    let sum = litherland_sum(&pattern, &companion, a.winding).map_err(|e| e.to_string())?;
    let ideal = sum.order_ideal();
    let companion_ideal = companion
        .order_ideal()
        .substitute_power(a.winding)
        .map_err(|e| e.to_string())?;
    let expected = &pattern.order_ideal() * &companion_ideal;
    let report = SatelliteReport {
        pattern: knot_name(a.pattern),
        companion: knot_name(a.companion),
        winding: a.winding,
        matches: ideal.equals_up_to_signed_monomial(&expected),
        order_ideal: ideal.unit_normalized().to_string(),
        expected_order_ideal: expected.unit_normalized().to_string(),
        presentation: sum,
    };
    let mut t = String::new();
    writeln!(t, "pattern    {}", report.pattern).unwrap();
    writeln!(t, "companion  {}", report.companion).unwrap();
    writeln!(t, "winding    {}", report.winding).unwrap();
    writeln!(t, "presentation").unwrap();
    for row in report.presentation.to_strings() {
        writeln!(t, "  [{}]", row.join(", ")).unwrap();
    }
    writeln!(t, "order ideal           {}", report.order_ideal).unwrap();
    writeln!(t, "pattern * companion^w {}", report.expected_order_ideal).unwrap();
    writeln!(t, "matches               {}", report.matches).unwrap();
    let ok = report.matches;
    Ok(Outcome::new(&report, t, ok))
}

pub fn verify_all(a: &VerifyArgs) -> Outcome {
    let cfg = VerifyConfig {
        sweep_cmax: a.sweep_cmax,
        sweep_pmax: a.sweep_pmax,
        kmax: a.kmax,
        ..VerifyConfig::default()
    };
    let report: VerifyReport = run_all(&cfg);
    let text = format!("{report}\n");
    let ok = report.passed();
    Outcome::new(&report, text, ok)
}
