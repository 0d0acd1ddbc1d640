use std::fmt;
use std::str::FromStr;

/// Role tag of a vertex inside a family-built graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    U,
    V,
    UPrime,
    VPrime,
    /// Gadget hub `a` of the odd-diameter construction.
    A,
    /// Gadget hub `c` of the odd-diameter construction.
    C,
    /// Pendant hanging off `a` (the `b_i` vertices).
    PendA,
    /// Pendant hanging off `c` (the `d_i` vertices).
    PendC,
}

impl Tag {
    fn as_str(self) -> &'static str {
        match self {
            Tag::U => "u",
            Tag::V => "v",
            Tag::UPrime => "u'",
            Tag::VPrime => "v'",
            Tag::A => "a",
            Tag::C => "c",
            Tag::PendA => "pend_a",
            Tag::PendC => "pend_c",
        }
    }

    fn parse(s: &str) -> Option<Tag> {
        Some(match s {
            "u" => Tag::U,
            "v" => Tag::V,
            "u'" => Tag::UPrime,
            "v'" => Tag::VPrime,
            "a" => Tag::A,
            "c" => Tag::C,
            "pend_a" => Tag::PendA,
            "pend_c" => Tag::PendC,
            _ => return None,
        })
    }
}

/// Structured name of a vertex, e.g. `v_j^(i)` is `Tag::V` with index `j`
/// and layer `i`. Indices are 1-based like the names they encode.
///
/// Text form: `<tag>[_<index>][^<layer>]`, for example `u_3^2`, `v'_1`, `a`,
/// `pend_c_2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabel {
    pub tag: Tag,
    pub index: Option<u32>,
    pub layer: Option<u32>,
}

impl VertexLabel {
    pub fn new(tag: Tag) -> Self {
        VertexLabel { tag, index: None, layer: None }
    }

    pub fn indexed(tag: Tag, index: u32) -> Self {
        VertexLabel { tag, index: Some(index), layer: None }
    }

    pub fn layered(tag: Tag, index: u32, layer: u32) -> Self {
        VertexLabel { tag, index: Some(index), layer: Some(layer) }
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag.as_str())?;
        if let Some(j) = self.index {
            write!(f, "_{j}")?;
        }
        if let Some(i) = self.layer {
            write!(f, "^{i}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed vertex label `{0}`")]
pub struct LabelParseError(pub String);

impl FromStr for VertexLabel {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LabelParseError(s.to_string());
        let (head, layer) = match s.split_once('^') {
            Some((h, l)) => (h, Some(parse_index(l).ok_or_else(err)?)),
            None => (s, None),
        };
        let (tag, index) = match head.rsplit_once('_') {
            Some((t, j)) if j.bytes().all(|b| b.is_ascii_digit()) => (t, Some(parse_index(j).ok_or_else(err)?)),
            _ => (head, None),
        };
        let tag = Tag::parse(tag).ok_or_else(err)?;
        if layer.is_some() && index.is_none() {
            return Err(err());
        }
        let label = VertexLabel { tag, index, layer };
        // reject non-canonical spellings such as `u_01`
        if label.to_string() != s {
            return Err(err());
        }
        Ok(label)
    }
}

fn parse_index(s: &str) -> Option<u32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}
