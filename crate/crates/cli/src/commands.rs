use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use kbar_core::classify::{classify_two_point, render_region, TwoPointClass};
use kbar_core::duality::{cat_to_lcs, enumerate_homs, hom_canonical_leq, lcs_to_cat};
use kbar_core::enriched_cat::{canonical_leq, enumerate_functors, is_functor, validate_category, verify_yoneda};
use kbar_core::lconvex::{closure, from_generators, member};
use kbar_core::scalar_algebra::{check_laws, EnrichingLattice, KbarPlus, KbarPlusCart, LatticeName, LawReport, Two};
use kbar_core::{
    ExtScalar, GeneratorSet, Homomorphism, KCategory, Kbar, LConvexSet, PointVector, RawConstraints, Real, Scalar,
    SquareMatrix, VCategory, VFunctor,
};

use crate::document::{parse, AnyDocument, Body, Document, Kind};
use crate::{CliError, Command, Outcome};

type Ext<K> = ExtScalar<K>;
type Res<T> = Result<T, CliError>;

/// Runs one subcommand. Errors become an outcome with a diagnostic on
/// standard error and status 2 (bad input) or 3 (internal).
pub fn run(command: &Command) -> Outcome {
    match dispatch(command) {
        Ok(out) => out,
        Err(Failure::Invalid(report)) => Outcome::verdict(false, report),
        Err(Failure::Error(e)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            status: e.status(),
        },
    }
}

enum Failure {
    /// An input violated the laws; the report goes to standard output.
    Invalid(String),
    Error(CliError),
}

impl<E: Into<CliError>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.into())
    }
}

type Run<T> = Result<T, Failure>;

fn load(path: &Path) -> Res<AnyDocument> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn input(msg: impl Into<String>) -> Failure {
    Failure::Error(CliError::Input(msg.into()))
}

fn expect_kind<K>(d: &Document<K>, allowed: &[Kind], command: &str) -> Run<()> {
    if allowed.contains(&d.kind) {
        return Ok(());
    }
    let names: Vec<&str> = allowed.iter().map(|k| k.as_str()).collect();
    Err(input(format!(
        "{command} expects a {} document, got {}",
        names.join(" or "),
        d.kind
    )))
}

fn matrix<K>(d: &Document<K>) -> Run<&SquareMatrix<Ext<K>>> {
    match &d.body {
        Body::Matrix(m) => Ok(m),
        Body::Points(_) => Err(Failure::Error(CliError::Internal(format!("{} document without a matrix", d.kind)))),
    }
}

fn points<K>(d: &Document<K>) -> Run<&[PointVector<K>]> {
    match &d.body {
        Body::Points(p) => Ok(p),
        Body::Matrix(_) => Err(Failure::Error(CliError::Internal(format!("{} document without points", d.kind)))),
    }
}

/// The matrix as a category, failing with the law report if it is not one.
fn valid_category<K: Scalar>(d: &Document<K>) -> Run<KCategory<K>> {
    let c = VCategory::new(Kbar::new(), d.labels.clone(), matrix(d)?.clone())?;
    let report = validate_category(&c)?;
    if !report.is_valid() {
        return Err(Failure::Invalid(format!("invalid {}\n{report}\n", d.kind)));
    }
    Ok(c)
}

fn valid_lconvex<K: Scalar>(d: &Document<K>) -> Run<LConvexSet<K>> {
    let c = valid_category(d)?;
    Ok(LConvexSet::new(c.objects().to_vec(), c.hom_matrix().clone())?)
}

fn lconvex_document<K: Scalar>(d: &LConvexSet<K>) -> Document<K> {
    Document::matrix(Kind::LConvex, d.index().to_vec(), d.dbm().clone())
}

fn kcategory_document<K: Scalar>(c: &KCategory<K>) -> Document<K> {
    Document::matrix(Kind::KCategory, c.objects().to_vec(), c.hom_matrix().clone())
}

macro_rules! per_scalar {
    ($doc:expr, $d:ident => $body:expr) => {
        match $doc {
            AnyDocument::Int($d) => $body,
            AnyDocument::Real($d) => $body,
        }
    };
}

macro_rules! per_scalar_pair {
    ($a:expr, $b:expr, ($x:ident, $y:ident) => $body:expr) => {
        match ($a, $b) {
            (AnyDocument::Int($x), AnyDocument::Int($y)) => $body,
            (AnyDocument::Real($x), AnyDocument::Real($y)) => $body,
            _ => Err(input("the two documents use different scalar kinds")),
        }
    };
}

fn dispatch(command: &Command) -> Run<Outcome> {
    match command {
        Command::Validate { file } => per_scalar!(load(file)?, d => validate(&d)),
        Command::Dual { file } => per_scalar!(load(file)?, d => dual(&d)),
        Command::Member { file, point } => per_scalar!(load(file)?, d => member_cmd(&d, point)),
        Command::Closure { file } => per_scalar!(load(file)?, d => closure_cmd(&d)),
        Command::Hull { file } => per_scalar!(load(file)?, d => hull(&d)),
        Command::Functors { domain, codomain } => {
            per_scalar_pair!(load(domain)?, load(codomain)?, (a, b) => functors(&a, &b))
        }
        Command::Homs { domain, codomain } => {
            per_scalar_pair!(load(domain)?, load(codomain)?, (a, b) => homs(&a, &b))
        }
        Command::Leq { domain, codomain, maps } => {
            let [f, g] = &maps[..] else {
                return Err(input(format!("leq needs exactly two --map specs, got {}", maps.len())));
            };
            per_scalar_pair!(load(domain)?, load(codomain)?, (a, b) => leq(&a, &b, f, g))
        }
        Command::Classify2 { file } => per_scalar!(load(file)?, d => classify2(&d)),
        Command::YonedaCheck { file } => per_scalar!(load(file)?, d => yoneda_check(&d)),
        Command::Render { file, bound } => match load(file)? {
            AnyDocument::Int(d) => render(&d, *bound),
            AnyDocument::Real(_) => Err(input("render works on the integer grid; use `scalar: int`")),
        },
        Command::Laws { lattice, bound, scalar } => laws(lattice, *bound, scalar),
    }
}

fn validate<K: Scalar>(d: &Document<K>) -> Run<Outcome> {
    let n = d.labels.len();
    match d.kind {
        Kind::KCategory | Kind::LConvex => {
            valid_category(d)?;
            Ok(Outcome::ok(format!("valid {} with {n} labels\n", d.kind)))
        }
        Kind::Constraints => {
            let c = RawConstraints::new(d.labels.clone(), matrix(d)?.clone())?;
            let closed = closure(&c)?.dbm() == c.matrix();
            Ok(Outcome::ok(format!(
                "well-formed constraints with {n} labels, {}\n",
                if closed { "already closed" } else { "not closed" }
            )))
        }
        Kind::Points | Kind::Generators => Ok(Outcome::ok(format!(
            "well-formed {} with {} points over {n} labels\n",
            d.kind,
            points(d)?.len()
        ))),
    }
}

fn dual<K: Scalar>(d: &Document<K>) -> Run<Outcome> {
    expect_kind(d, &[Kind::KCategory, Kind::LConvex], "dual")?;
    let c = valid_category(d)?;
    let out = if d.kind == Kind::KCategory {
        lconvex_document(&cat_to_lcs(&c)?)
    } else {
        let lcs = LConvexSet::new(c.objects().to_vec(), c.hom_matrix().clone())?;
        kcategory_document(&lcs_to_cat(&lcs)?)
    };
    Ok(Outcome::ok(out.emit()))
}

fn parse_point<K: Scalar>(labels: &[String], spec: &str) -> Run<PointVector<K>> {
    let mut pairs = Vec::new();
    for part in spec.split(',').filter(|p| !p.trim().is_empty()) {
        let Some((label, value)) = part.split_once('=') else {
            return Err(input(format!("point coordinate `{part}` is not `label=value`")));
        };
        let value: Ext<K> = value
            .trim()
            .parse()
            .map_err(|_| input(format!("`{}` is not a valid {} scalar", value.trim(), K::KIND)))?;
        pairs.push((label.trim(), value));
    }
    Ok(PointVector::from_assignment(labels, &pairs)?)
}

fn member_cmd<K: Scalar>(d: &Document<K>, spec: &str) -> Run<Outcome> {
    expect_kind(d, &[Kind::LConvex, Kind::Constraints], "member")?;
    let p = parse_point::<K>(&d.labels, spec)?;
    let inside = if d.kind == Kind::LConvex {
        member(&valid_lconvex(d)?, &p)?
    } else {
        RawConstraints::new(d.labels.clone(), matrix(d)?.clone())?.satisfied_by(&p)?
    };
    Ok(Outcome::verdict(inside, format!("{inside}\n")))
}

fn closure_cmd<K: Scalar>(d: &Document<K>) -> Run<Outcome> {
    expect_kind(d, &[Kind::Constraints, Kind::LConvex], "closure")?;
    let c = RawConstraints::new(d.labels.clone(), matrix(d)?.clone())?;
    Ok(Outcome::ok(lconvex_document(&closure(&c)?).emit()))
}

fn hull<K: Scalar>(d: &Document<K>) -> Run<Outcome> {
    expect_kind(d, &[Kind::Generators, Kind::Points], "hull")?;
    let s = GeneratorSet::new(d.labels.clone(), points(d)?.to_vec())?;
    Ok(Outcome::ok(lconvex_document(&from_generators(&s)?).emit()))
}

fn functors<K: Scalar>(a: &Document<K>, b: &Document<K>) -> Run<Outcome> {
    expect_kind(a, &[Kind::KCategory], "functors")?;
    expect_kind(b, &[Kind::KCategory], "functors")?;
    let a = Arc::new(valid_category(a)?);
    let b = Arc::new(valid_category(b)?);
    let mut out = String::new();
    let all = enumerate_functors(&a, &b);
    for f in &all {
        writeln!(out, "{f}").unwrap();
    }
    writeln!(out, "{} functors", all.len()).unwrap();
    Ok(Outcome::ok(out))
}

fn homs<K: Scalar>(d: &Document<K>, e: &Document<K>) -> Run<Outcome> {
    expect_kind(d, &[Kind::LConvex], "homs")?;
    expect_kind(e, &[Kind::LConvex], "homs")?;
    let d = Arc::new(valid_lconvex(d)?);
    let e = Arc::new(valid_lconvex(e)?);
    let mut out = String::new();
    let all = enumerate_homs(&d, &e);
    for h in &all {
        writeln!(out, "{h}").unwrap();
    }
    writeln!(out, "{} homomorphisms", all.len()).unwrap();
    Ok(Outcome::ok(out))
}

fn map_pairs(spec: &str) -> Run<Vec<(&str, &str)>> {
    spec.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            p.split_once(':')
                .map(|(a, b)| (a.trim(), b.trim()))
                .ok_or_else(|| input(format!("map entry `{p}` is not `from:to`")))
        })
        .collect()
}

fn leq<K: Scalar>(a: &Document<K>, b: &Document<K>, f: &str, g: &str) -> Run<Outcome> {
    if a.kind != b.kind {
        return Err(input(format!("leq needs two documents of one kind, got {} and {}", a.kind, b.kind)));
    }
    let (fg, gf) = match a.kind {
        Kind::KCategory => {
            let a = Arc::new(valid_category(a)?);
            let b = Arc::new(valid_category(b)?);
            let f = VFunctor::from_labels(a.clone(), b.clone(), &map_pairs(f)?)?;
            let g = VFunctor::from_labels(a, b, &map_pairs(g)?)?;
            for h in [&f, &g] {
                if !is_functor(h) {
                    return Err(Failure::Invalid(format!("{h} is not a functor\n")));
                }
            }
            (canonical_leq(&f, &g)?, canonical_leq(&g, &f)?)
        }
        Kind::LConvex => {
            let d = Arc::new(valid_lconvex(a)?);
            let e = Arc::new(valid_lconvex(b)?);
            let phi = Homomorphism::from_labels(d.clone(), e.clone(), &map_pairs(f)?)?;
            let psi = Homomorphism::from_labels(d, e, &map_pairs(g)?)?;
            for h in [&phi, &psi] {
                if !h.is_valid() {
                    return Err(Failure::Invalid(format!("{h} is not a homomorphism\n")));
                }
            }
            (hom_canonical_leq(&phi, &psi)?, hom_canonical_leq(&psi, &phi)?)
        }
        other => return Err(input(format!("leq expects kcategory or lconvex documents, got {other}"))),
    };
    Ok(Outcome::verdict(fg, format!("first => second: {fg}\nsecond => first: {gf}\n")))
}

fn classify2<K: Scalar>(d: &Document<K>) -> Run<Outcome> {
    expect_kind(d, &[Kind::KCategory, Kind::LConvex], "classify2")?;
    if d.labels.len() != 2 {
        return Err(input(format!("classify2 needs exactly two labels, got {}", d.labels.len())));
    }
    match classify_two_point(matrix(d)?)? {
        TwoPointClass::Valid(c) => Ok(Outcome::ok(format!("{c}\n"))),
        TwoPointClass::Invalid(report) => Err(Failure::Invalid(format!("invalid {}\n{report}\n", d.kind))),
        TwoPointClass::Unmatched => Err(Failure::Error(CliError::Internal(
            "a valid two-point matrix matched no family".into(),
        ))),
    }
}

fn yoneda_check<K: Scalar>(d: &Document<K>) -> Run<Outcome> {
    expect_kind(d, &[Kind::KCategory], "yoneda-check")?;
    let holds = verify_yoneda(&valid_category(d)?)?;
    Ok(Outcome::verdict(holds, format!("{holds}\n")))
}

fn render(d: &Document<i64>, bound: i64) -> Run<Outcome> {
    expect_kind(d, &[Kind::LConvex, Kind::KCategory], "render")?;
    if !(0..=50).contains(&bound) {
        return Err(input(format!("bound {bound} is outside 0..=50")));
    }
    let lcs = valid_lconvex(d)?;
    if lcs.size() != 2 {
        return Err(input(format!("render needs exactly two labels, got {}", lcs.size())));
    }
    Ok(Outcome::ok(render_region(&lcs, bound)?))
}

fn law_outcome(report: LawReport) -> Outcome {
    Outcome::verdict(report.passed(), report.to_string())
}

fn laws_for<L: EnrichingLattice>(l: L, bound: i64) -> Run<Outcome> {
    Ok(law_outcome(check_laws(&l, bound)?))
}

fn laws_scalar<K: Scalar>(name: LatticeName, bound: i64) -> Run<Outcome> {
    match name {
        LatticeName::Two => laws_for(Two, bound),
        LatticeName::Kbar => laws_for(Kbar::<K>::new(), bound),
        LatticeName::KbarPlus => laws_for(KbarPlus::<K>::new(), bound),
        LatticeName::KbarPlusCart => laws_for(KbarPlusCart::<K>::new(), bound),
    }
}

fn laws(lattice: &str, bound: i64, scalar: &str) -> Run<Outcome> {
    let name: LatticeName = lattice
        .parse()
        .map_err(|_| input(format!("unknown lattice `{lattice}`; expected two, kbar-plus, kbar or kbar-plus-cart")))?;
    if !(0..=20).contains(&bound) {
        return Err(input(format!("bound {bound} is outside 0..=20")));
    }
    match scalar {
        "int" => laws_scalar::<i64>(name, bound),
        "real" => laws_scalar::<Real>(name, bound),
        other => Err(input(format!("unknown scalar `{other}`, expected int or real"))),
    }
}
