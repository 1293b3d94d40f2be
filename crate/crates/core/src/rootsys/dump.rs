use serde::{Deserialize, Serialize};

use super::RootSystem;

/// JSON form of a root system. Rational entries are `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootSystemDump {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub simple_roots: Vec<Vec<i64>>,
    pub positive_roots: Vec<Vec<i64>>,
    pub roots: Vec<Vec<i64>>,
    pub positive_roots_simple_coords: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub weyl_vector: Vec<i64>,
    pub inner_product: Vec<Vec<String>>,
}

impl RootSystemDump {
    pub fn from_root_system(rs: &RootSystem) -> Self {
        let coords = |ws: &[crate::Weight]| ws.iter().map(|w| w.coords().to_vec()).collect();
        let ip = rs.inner_product_matrix();
        Self {
            type_label: rs.simple_type().to_string(),
            rank: rs.rank(),
            cartan: rs.cartan().to_vec(),
            simple_roots: coords(rs.simple_roots()),
            positive_roots: coords(rs.positive_roots()),
            roots: coords(rs.roots()),
            positive_roots_simple_coords: (0..rs.num_positive()).map(|k| rs.root_coords(k).to_vec()).collect(),
            coroots: (0..rs.num_roots()).map(|k| rs.coroot(k).to_vec()).collect(),
            weyl_vector: rs.weyl_vector().coords().to_vec(),
            inner_product: (0..ip.rows())
                .map(|i| (0..ip.cols()).map(|j| ip[(i, j)].to_string()).collect())
                .collect(),
        }
    }
}
