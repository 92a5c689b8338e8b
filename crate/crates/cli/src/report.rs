use serde::Serialize;

/// Machine-readable result of one invocation. Sections that a command does
/// not produce are omitted.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub operad: String,
    pub closure_enlarged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims_detail: Option<Vec<DimDetail>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dual: Option<DualSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub koszul: Option<KoszulSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduce: Option<ReduceSection>,
    pub field: String,
    pub versions: Versions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Debug, Serialize)]
pub struct DimDetail {
    pub arity: usize,
    pub dim: usize,
    pub method: Option<String>,
    pub field: String,
}

#[derive(Debug, Serialize)]
pub struct DualSection {
    pub route: String,
    pub dimension: usize,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routes_agree: Option<bool>,
    /// Built-in relation set with the same span, if any.
    pub matches_preset: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct KoszulSection {
    pub verdict: String,
    pub obstruction_order: Option<usize>,
    pub obstruction_coefficient: Option<String>,
    pub order: usize,
    pub dual_dims: Vec<usize>,
    pub series: Vec<String>,
    pub dual_series: Vec<String>,
    pub composite: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct ReduceSection {
    pub input: String,
    pub is_equation: bool,
    pub normal_form: String,
    pub representatives: Vec<String>,
    pub in_span: bool,
}

#[derive(Debug, Serialize)]
pub struct Versions {
    pub quadop: &'static str,
    pub cli: &'static str,
}

impl Default for Versions {
    fn default() -> Versions {
        Versions {
            quadop: quadop::VERSION,
            cli: env!("CARGO_PKG_VERSION"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u128,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = vec![format!("operad: {}", self.operad)];
        if self.closure_enlarged {
            out.push("note: closing under relabelling enlarged the given relations".into());
        }
        if let Some(d) = &self.dims_detail {
            out.push("arity  dim  field".into());
            for e in d {
                out.push(format!("{:>5}  {:>3}  {}", e.arity, e.dim, e.field));
            }
        }
        if let Some(d) = &self.dual {
            let route = if d.route == "both" {
                "pairing and lieadm"
            } else {
                d.route.as_str()
            };
            out.push(format!(
                "dual relations via {route}, dimension {}:",
                d.dimension
            ));
            out.extend(d.generators.iter().map(|g| format!("  {g}")));
            if let Some(p) = &d.matches_preset {
                out.push(format!("dual relations span = preset {p}"));
            }
            if let Some(agree) = d.routes_agree {
                out.push(format!(
                    "routes agree: {}",
                    if agree { "PASS" } else { "FAIL" }
                ));
            }
        }
        if let Some(k) = &self.koszul {
            out.push(format!(
                "dims: {:?}",
                self.dims.as_deref().unwrap_or_default()
            ));
            out.push(format!("dual dims: {:?}", k.dual_dims));
            out.push(format!("H(t) coefficients: [{}]", k.series.join(", ")));
            out.push(format!(
                "H!(t) coefficients: [{}]",
                k.dual_series.join(", ")
            ));
            out.push(format!(
                "H(H!(t)) coefficients: [{}]",
                k.composite.join(", ")
            ));
            match (&k.obstruction_order, &k.obstruction_coefficient) {
                (Some(n), Some(c)) => out.push(format!("NOT-KOSZUL: coefficient {c} at t^{n}")),
                _ => out.push(format!(
                    "INCONCLUSIVE: no obstruction through t^{}",
                    k.order
                )),
            }
        }
        if let Some(r) = &self.reduce {
            out.push(format!("normal form: {}", r.normal_form));
            out.push(format!("representatives: {}", r.representatives.join(", ")));
            if r.is_equation {
                out.push(format!(
                    "identity holds: {}",
                    if r.in_span { "yes" } else { "no" }
                ));
            } else {
                out.push(format!(
                    "in relation span: {}",
                    if r.in_span { "yes" } else { "no" }
                ));
            }
        }
        out.push(format!("field: {}", self.field));
        if let Some(t) = &self.timing {
            out.push(format!("time: {} ms", t.elapsed_ms));
        }
        out.join("\n")
    }
}
