use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use reversal_core::affine::{
    aff_classify, aff_reverser, aff_strong_reverser, four_involutions, theta_embed, AffineMap,
};
use reversal_core::jordan::{compute_jordan_form, Spectrum};
use reversal_core::json::{
    affine_report_to_value, affine_to_value, affine_witness_to_value, input_from_value,
    jordan_to_value, matrix_report_to_value, matrix_to_value, matrix_witness_to_value, parse_json,
    spectrum_from_value, AnyAffine, Input,
};
use reversal_core::matrices::{phi, psi, AnyMatrix};
use reversal_core::oracle::{
    verify_ad_reverser, verify_affine_involution, verify_affine_reverser, verify_involution,
    verify_reverser, OracleVerdict,
};
use reversal_core::reversibility::{
    ad_reverser, analyze, reverser, two_involutions, Mode, ReverserWitness,
};
use reversal_core::{DivisionRing, Error, ErrorClass, Matrix, Result, Ring};

#[derive(Parser)]
#[command(
    name = "reversal",
    version,
    about = "Reversibility, Jordan forms and involution factorizations over Q, Q(i) and H"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Promote the input to this ring before computing.
    #[arg(long, global = true, value_parser = parse_ring)]
    ring: Option<Ring>,
    /// Input file, or `-` for standard input.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// JSON file listing the eigenvalues of the (linear part of the) input.
    #[arg(long, global = true)]
    spectrum_hint: Option<PathBuf>,
    /// Compact JSON output (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON output.
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Jordan form with a certified similarity.
    Jordan,
    /// Reversibility of a matrix, or Ad-reality with --lie.
    ClassifyGl {
        #[arg(long)]
        lie: bool,
    },
    /// Reversibility of an affine map.
    ClassifyAff,
    /// A reversing element, involutive with --strong.
    Reverser {
        #[arg(long)]
        lie: bool,
        #[arg(long)]
        strong: bool,
    },
    /// Factor into two involutions.
    Involutions,
    /// Factor into four involutions.
    FourInvolutions,
    /// Apply one of the standard embeddings.
    Embed {
        #[arg(value_enum)]
        map: EmbedMap,
    },
    /// Check a candidate against the defining identity.
    Verify {
        #[arg(value_enum)]
        what: VerifyWhat,
        #[arg(long)]
        lie: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum EmbedMap {
    Phi,
    Psi,
    Theta,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyWhat {
    Reverser,
    Involution,
}

fn parse_ring(s: &str) -> std::result::Result<Ring, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

macro_rules! on_matrix {
    ($m:expr, $f:ident ( $($arg:expr),* )) => {
        match $m {
            AnyMatrix::R(m) => $f(m, $($arg),*),
            AnyMatrix::C(m) => $f(m, $($arg),*),
            AnyMatrix::H(m) => $f(m, $($arg),*),
        }
    };
}

macro_rules! on_affine {
    ($g:expr, $f:ident ( $($arg:expr),* )) => {
        match $g {
            AnyAffine::R(g) => $f(g, $($arg),*),
            AnyAffine::C(g) => $f(g, $($arg),*),
            AnyAffine::H(g) => $f(g, $($arg),*),
        }
    };
}

fn self_check(v: OracleVerdict, what: &str) -> Result<()> {
    if v.holds {
        Ok(())
    } else {
        Err(Error::InternalInvariant(format!(
            "{what}: {}",
            v.describe()
        )))
    }
}

fn read_source(path: &str) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn promote(input: Input, ring: Option<Ring>) -> Result<Input> {
    let Some(to) = ring else { return Ok(input) };
    Ok(match input {
        Input::Matrix(m) => Input::Matrix(m.promote(to)?),
        Input::Affine(g) => Input::Affine(g.promote(to)?),
    })
}

fn input_ring(input: &Input) -> Ring {
    match input {
        Input::Matrix(m) => m.ring(),
        Input::Affine(g) => g.ring(),
    }
}

fn need_matrix(input: Input, command: &str) -> Result<AnyMatrix> {
    match input {
        Input::Matrix(m) => Ok(m),
        Input::Affine(_) => Err(Error::InvalidArgument(format!(
            "{command} expects a matrix, got an affine map"
        ))),
    }
}

fn need_affine(input: Input, command: &str) -> Result<AnyAffine> {
    match input {
        Input::Affine(g) => Ok(g),
        Input::Matrix(_) => Err(Error::InvalidArgument(format!(
            "{command} expects an affine map, got a matrix"
        ))),
    }
}

fn need_square(m: &AnyMatrix) -> Result<()> {
    let (rows, cols) = m.shape();
    if rows != cols {
        return Err(Error::NotSquare { rows, cols });
    }
    Ok(())
}

fn jordan_cmd<T: DivisionRing>(a: &Matrix<T>, hint: Option<&Spectrum>) -> Result<Value> {
    let form = compute_jordan_form(a, hint)?;
    if !form.certifies(a) {
        return Err(Error::InternalInvariant(
            "S·A ≠ J·S for the computed form".into(),
        ));
    }
    Ok(jordan_to_value(&form))
}

fn check_matrix_witness<T: DivisionRing>(
    a: &Matrix<T>,
    w: &ReverserWitness<Matrix<T>>,
    mode: Mode,
) -> Result<()> {
    let v = match mode {
        Mode::Group => verify_reverser(a, &w.element),
        Mode::Lie => verify_ad_reverser(a, &w.element),
    };
    self_check(v, "reverser")?;
    if w.is_involution {
        self_check(verify_involution(&w.element), "involution")?;
    }
    Ok(())
}

fn classify_gl_cmd<T: DivisionRing>(
    a: &Matrix<T>,
    hint: Option<&Spectrum>,
    mode: Mode,
) -> Result<Value> {
    let report = analyze(a, mode, hint)?;
    if let Some(w) = &report.witness {
        check_matrix_witness(a, w, mode)?;
    }
    Ok(matrix_report_to_value(&report))
}

fn classify_aff_cmd<T: DivisionRing>(g: &AffineMap<T>, hint: Option<&Spectrum>) -> Result<Value> {
    let report = aff_classify(g, hint)?;
    if let Some(w) = &report.witness {
        self_check(verify_affine_reverser(g, &w.element), "affine reverser")?;
        if w.is_involution {
            self_check(verify_affine_involution(&w.element), "affine involution")?;
        }
    }
    Ok(affine_report_to_value(&report))
}

fn reverser_cmd<T: DivisionRing>(
    a: &Matrix<T>,
    hint: Option<&Spectrum>,
    mode: Mode,
    strong: bool,
) -> Result<Value> {
    let form = compute_jordan_form(a, hint)?;
    let w = match (mode, strong) {
        (Mode::Group, false) => reverser(a, &form)?,
        (Mode::Group, true) => {
            let [first, _] = two_involutions(a, &form)?;
            first
        }
        (Mode::Lie, _) => {
            let w = ad_reverser(a, &form)?;
            if strong && !w.is_involution {
                return Err(Error::NotStronglyReversible(
                    "no involutive Ad-reverser was found".into(),
                ));
            }
            w
        }
    };
    check_matrix_witness(a, &w, mode)?;
    Ok(matrix_witness_to_value(&w))
}

fn aff_reverser_cmd<T: DivisionRing>(
    g: &AffineMap<T>,
    hint: Option<&Spectrum>,
    strong: bool,
) -> Result<Value> {
    let w = if strong {
        aff_strong_reverser(g, hint)?
    } else {
        aff_reverser(g, hint)?
    };
    self_check(verify_affine_reverser(g, &w.element), "affine reverser")?;
    if w.is_involution {
        self_check(verify_affine_involution(&w.element), "affine involution")?;
    }
    Ok(affine_witness_to_value(&w))
}

fn involutions_cmd<T: DivisionRing>(a: &Matrix<T>, hint: Option<&Spectrum>) -> Result<Value> {
    let form = compute_jordan_form(a, hint)?;
    let [g1, g2] = two_involutions(a, &form)?;
    self_check(verify_involution(&g1.element), "first factor")?;
    self_check(verify_involution(&g2.element), "second factor")?;
    if &g1.element * &g2.element != *a {
        return Err(Error::InternalInvariant(
            "product of factors differs from input".into(),
        ));
    }
    Ok(json!({"factors": [matrix_to_value(&g1.element), matrix_to_value(&g2.element)]}))
}

fn aff_involutions_cmd<T: DivisionRing>(
    g: &AffineMap<T>,
    hint: Option<&Spectrum>,
) -> Result<Value> {
    let h = aff_strong_reverser(g, hint)?.element;
    let second = h.compose(g)?;
    self_check(verify_affine_involution(&h), "first factor")?;
    self_check(verify_affine_involution(&second), "second factor")?;
    if h.compose(&second)? != *g {
        return Err(Error::InternalInvariant(
            "product of factors differs from input".into(),
        ));
    }
    Ok(json!({"factors": [affine_to_value(&h), affine_to_value(&second)]}))
}

fn checked_four<T: DivisionRing>(
    g: &AffineMap<T>,
    hint: Option<&Spectrum>,
) -> Result<[AffineMap<T>; 4]> {
    let f = four_involutions(g, hint)?;
    let mut product = AffineMap::identity(g.dim());
    for h in &f {
        self_check(verify_affine_involution(h), "factor")?;
        product = product.compose(h)?;
    }
    if product != *g {
        return Err(Error::InternalInvariant(
            "product of factors differs from input".into(),
        ));
    }
    Ok(f)
}

fn four_cmd<T: DivisionRing>(a: &Matrix<T>, hint: Option<&Spectrum>) -> Result<Value> {
    let f = checked_four(&AffineMap::linear_only(a.clone()), hint)?;
    Ok(json!({"factors": f.iter().map(|h| matrix_to_value(&h.linear)).collect::<Vec<_>>()}))
}

fn aff_four_cmd<T: DivisionRing>(g: &AffineMap<T>, hint: Option<&Spectrum>) -> Result<Value> {
    let f = checked_four(g, hint)?;
    Ok(json!({"factors": f.iter().map(affine_to_value).collect::<Vec<_>>()}))
}

fn theta_cmd<T: DivisionRing>(g: &AffineMap<T>) -> Result<Value> {
    Ok(matrix_to_value(&theta_embed(g)))
}

fn verdict_value(v: &OracleVerdict) -> Value {
    json!({
        "holds": v.holds,
        "counterexample": v.counterexample.as_ref().map(|c| json!({
            "input": c.input,
            "expected": c.expected,
            "got": c.got,
        })),
    })
}

fn verify_pair<T: DivisionRing>(a: &Matrix<T>, r: &Matrix<T>, mode: Mode) -> OracleVerdict {
    match mode {
        Mode::Group => verify_reverser(a, r),
        Mode::Lie => verify_ad_reverser(a, r),
    }
}

fn verify_reverser_cmd(element: Input, candidate: Input, mode: Mode) -> Result<Value> {
    let ring = Some(input_ring(&element).max(input_ring(&candidate)));
    let v = match (promote(element, ring)?, promote(candidate, ring)?) {
        (Input::Matrix(a), Input::Matrix(r)) => match (&a, &r) {
            (AnyMatrix::R(a), AnyMatrix::R(r)) => verify_pair(a, r, mode),
            (AnyMatrix::C(a), AnyMatrix::C(r)) => verify_pair(a, r, mode),
            (AnyMatrix::H(a), AnyMatrix::H(r)) => verify_pair(a, r, mode),
            _ => unreachable!("promoted to a common ring"),
        },
        (Input::Affine(_), Input::Affine(_)) if mode == Mode::Lie => {
            return Err(Error::InvalidArgument(
                "--lie applies to matrices only".into(),
            ))
        }
        (Input::Affine(g), Input::Affine(h)) => match (&g, &h) {
            (AnyAffine::R(g), AnyAffine::R(h)) => verify_affine_reverser(g, h),
            (AnyAffine::C(g), AnyAffine::C(h)) => verify_affine_reverser(g, h),
            (AnyAffine::H(g), AnyAffine::H(h)) => verify_affine_reverser(g, h),
            _ => unreachable!("promoted to a common ring"),
        },
        _ => {
            return Err(Error::InvalidArgument(
                "element and candidate must both be matrices or both be affine maps".into(),
            ))
        }
    };
    Ok(verdict_value(&v))
}

fn verify_involution_cmd(input: Input) -> Result<Value> {
    let v = match &input {
        Input::Matrix(m) => on_matrix!(m, verify_involution()),
        Input::Affine(g) => on_affine!(g, verify_affine_involution()),
    };
    Ok(verdict_value(&v))
}

fn load_input(value: &Value, ring: Option<Ring>) -> Result<Input> {
    promote(input_from_value(value)?, ring)
}

fn run(cli: &Cli) -> Result<Value> {
    let c = &cli.common;
    let value = parse_json(&read_source(&c.input)?)?;
    if let Command::Verify { what, lie } = &cli.command {
        let mode = if *lie { Mode::Lie } else { Mode::Group };
        let field = |key: &str| {
            value
                .get(key)
                .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))
                .and_then(|v| load_input(v, c.ring))
        };
        return match what {
            VerifyWhat::Reverser => {
                verify_reverser_cmd(field("element")?, field("candidate")?, mode)
            }
            VerifyWhat::Involution if value.get("element").is_some() => {
                verify_involution_cmd(field("element")?)
            }
            VerifyWhat::Involution => verify_involution_cmd(load_input(&value, c.ring)?),
        };
    }
    let input = load_input(&value, c.ring)?;
    let hint = match &c.spectrum_hint {
        Some(path) => {
            let text = read_source(&path.to_string_lossy())?;
            Some(spectrum_from_value(
                &parse_json(&text)?,
                input_ring(&input),
            )?)
        }
        None => None,
    };
    let hint = hint.as_ref();
    match &cli.command {
        Command::Jordan => {
            let m = need_matrix(input, "jordan")?;
            need_square(&m)?;
            on_matrix!(&m, jordan_cmd(hint))
        }
        Command::ClassifyGl { lie } => {
            let m = need_matrix(input, "classify-gl")?;
            need_square(&m)?;
            let mode = if *lie { Mode::Lie } else { Mode::Group };
            on_matrix!(&m, classify_gl_cmd(hint, mode))
        }
        Command::ClassifyAff => {
            let g = need_affine(input, "classify-aff")?;
            on_affine!(&g, classify_aff_cmd(hint))
        }
        Command::Reverser { lie, strong } => match input {
            Input::Matrix(m) => {
                need_square(&m)?;
                let mode = if *lie { Mode::Lie } else { Mode::Group };
                on_matrix!(&m, reverser_cmd(hint, mode, *strong))
            }
            Input::Affine(_) if *lie => Err(Error::InvalidArgument(
                "--lie applies to matrices only".into(),
            )),
            Input::Affine(g) => on_affine!(&g, aff_reverser_cmd(hint, *strong)),
        },
        Command::Involutions => match input {
            Input::Matrix(m) => {
                need_square(&m)?;
                on_matrix!(&m, involutions_cmd(hint))
            }
            Input::Affine(g) => on_affine!(&g, aff_involutions_cmd(hint)),
        },
        Command::FourInvolutions => match input {
            Input::Matrix(m) => {
                need_square(&m)?;
                on_matrix!(&m, four_cmd(hint))
            }
            Input::Affine(g) => on_affine!(&g, aff_four_cmd(hint)),
        },
        Command::Embed { map } => match map {
            EmbedMap::Phi => match need_matrix(input, "embed phi")?.promote(Ring::H)? {
                AnyMatrix::H(m) => Ok(matrix_to_value(&phi(&m))),
                _ => unreachable!(),
            },
            EmbedMap::Psi => match need_matrix(input, "embed psi")?.promote(Ring::C)? {
                AnyMatrix::C(m) => Ok(matrix_to_value(&psi(&m))),
                _ => unreachable!(),
            },
            EmbedMap::Theta => {
                let g = need_affine(input, "embed theta")?;
                on_affine!(&g, theta_cmd())
            }
        },
        Command::Verify { .. } => unreachable!("handled above"),
    }
}

fn render(value: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(value).expect("serializable")
    } else {
        value.to_string()
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            println!("{}", render(&value, cli.common.pretty));
            ExitCode::SUCCESS
        }
        Err(e) => {
            let value = json!({"error": {"kind": e.kind(), "detail": e.to_string()}});
            println!("{}", render(&value, cli.common.pretty));
            ExitCode::from(match e.class() {
                ErrorClass::Domain => 1,
                ErrorClass::Input => 2,
                ErrorClass::SelfCheck => 3,
            })
        }
    }
}
