//! The report document and its table rendering.

use serde::{Deserialize, Serialize};
use upic_core::rootdata::InvariantReport;
use upic_core::{AbelianGroupInvariants, Error, Result};

use crate::input::InputDocument;

/// A finitely generated abelian group `Z^free_rank ⊕ ⊕ Z/torsion[i]`, with
/// each torsion entry dividing the next.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl TryFrom<&AbelianGroupInvariants> for AbelianGroup {
    type Error = Error;

    fn try_from(g: &AbelianGroupInvariants) -> Result<Self> {
        let torsion = g
            .torsion
            .iter()
            .map(|d| u64::try_from(d).map_err(|_| Error::Unsupported(format!("torsion coefficient {d} exceeds 64 bits"))))
            .collect::<Result<_>>()?;
        Ok(Self { free_rank: g.free_rank, torsion })
    }
}

impl std::fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() { f.write_str("0") } else { f.write_str(&parts.join(" + ")) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub input: InputDocument,
    pub group_order: usize,
    pub kind: String,
    #[serde(rename = "U_rank")]
    pub u_rank: usize,
    pub pi1: AbelianGroup,
    #[serde(rename = "Pic_bar")]
    pub pic_bar: AbelianGroup,
    #[serde(rename = "Pic")]
    pub pic: AbelianGroup,
    #[serde(rename = "Br_a")]
    pub br_a: AbelianGroup,
    /// `null` when Ш was not requested.
    #[serde(rename = "Sha1_omega")]
    pub sha1_omega: Option<AbelianGroup>,
    #[serde(rename = "Sha2_omega")]
    pub sha2_omega: Option<AbelianGroup>,
    pub level_note: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl ReportDocument {
    pub fn new(input: InputDocument, r: &InvariantReport) -> Result<Self> {
        let conv = |g: &AbelianGroupInvariants| AbelianGroup::try_from(g);
        Ok(Self {
            input,
            group_order: r.group_order,
            kind: r.kind.clone(),
            u_rank: r.units_rank,
            pi1: conv(&r.pi1)?,
            pic_bar: conv(&r.pic_bar)?,
            pic: conv(&r.pic)?,
            br_a: conv(&r.br_a)?,
            sha1_omega: r.sha1.as_ref().map(conv).transpose()?,
            sha2_omega: r.sha2.as_ref().map(conv).transpose()?,
            level_note: r.level_note.to_string(),
            timing: None,
        })
    }

    pub fn to_table(&self) -> String {
        let opt = |g: &Option<AbelianGroup>| g.as_ref().map_or("not computed".to_string(), ToString::to_string);
        let mut rows = vec![
            ("group order", self.group_order.to_string()),
            ("type", if self.kind.is_empty() { "torus".into() } else { self.kind.clone() }),
            ("U rank", self.u_rank.to_string()),
            ("pi1", self.pi1.to_string()),
            ("Pic_bar", self.pic_bar.to_string()),
            ("Pic", self.pic.to_string()),
            ("Br_a", self.br_a.to_string()),
            ("Sha1_omega", opt(&self.sha1_omega)),
            ("Sha2_omega", opt(&self.sha2_omega)),
        ];
        if let Some(t) = &self.timing {
            rows.push(("elapsed", format!("{:.1} ms", t.elapsed_ms)));
        }
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<12} {v}\n"));
        }
        out.push_str(&format!("({})\n", self.level_note));
        out
    }
}
