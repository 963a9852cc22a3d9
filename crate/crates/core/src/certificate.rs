//! JSON documents exchanged through the command line and the C interface.

use serde_json::{json, Value};

use crate::diamond::{EmbeddingViolation, Obstruction};

/// `{"reason": ..., "witness": [...]}` plus reason-specific detail fields.
pub fn certificate_json(obstruction: &Obstruction) -> Value {
    let reason = obstruction.reason();
    match obstruction {
        Obstruction::EmptyGraph => json!({ "reason": reason, "witness": [] }),
        Obstruction::Disconnected { unreachable } => json!({
            "reason": reason,
            "witness": [0, unreachable],
        }),
        Obstruction::OddCycle { cycle } => json!({ "reason": reason, "witness": cycle }),
        Obstruction::NotPartialCube {
            u,
            v,
            graph_distance,
            hamming_distance,
        } => json!({
            "reason": reason,
            "witness": [u, v],
            "graph_distance": graph_distance,
            "hamming_distance": hamming_distance,
        }),
        Obstruction::IncoherentCut(cut) => json!({
            "reason": reason,
            "witness": [
                [cut.first_edge.0, cut.first_edge.1],
                [cut.conflicting_edge.0, cut.conflicting_edge.1],
            ],
            "class": cut.class_id,
        }),
    }
}

/// `{"ok": false, "violation": <kind>, "message": ..., "vertices": [...]}`.
pub fn violation_json(violation: &EmbeddingViolation) -> Value {
    let (kind, vertices): (&str, Vec<usize>) = match *violation {
        EmbeddingViolation::VertexCountMismatch { .. } => ("vertex_count_mismatch", vec![]),
        EmbeddingViolation::WrongLength { vertex, .. } => ("wrong_length", vec![vertex]),
        EmbeddingViolation::SumOutOfRange { vertex, .. } => ("sum_out_of_range", vec![vertex]),
        EmbeddingViolation::NotUnitStep { u, v } => ("not_unit_step", vec![u, v]),
        EmbeddingViolation::Unreachable { u, v } => ("unreachable", vec![u, v]),
        EmbeddingViolation::DistanceMismatch { u, v, .. } => ("distance_mismatch", vec![u, v]),
    };
    json!({
        "ok": false,
        "violation": kind,
        "message": violation.to_string(),
        "vertices": vertices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamond::{is_isometric_diamond_subgraph, IncoherentCut};
    use crate::generators::cycle;

    #[test]
    fn incoherent_cut_certificate() {
        let obstruction = is_isometric_diamond_subgraph(&cycle(4)).unwrap_err();
        let cert = certificate_json(&obstruction);
        assert_eq!(cert["reason"], "incoherent_cut");
        assert_eq!(cert["witness"], json!([[0, 1], [2, 3]]));
        assert_eq!(cert["class"], 0);
    }

    #[test]
    fn every_reason_has_a_witness_array() {
        let cases = [
            Obstruction::EmptyGraph,
            Obstruction::Disconnected { unreachable: 3 },
            Obstruction::OddCycle { cycle: vec![0, 1, 2] },
            Obstruction::NotPartialCube {
                u: 0,
                v: 4,
                graph_distance: 2,
                hamming_distance: 4,
            },
            Obstruction::IncoherentCut(IncoherentCut {
                class_id: 1,
                first_edge: (0, 1),
                conflicting_edge: (2, 3),
            }),
        ];
        for o in &cases {
            let cert = certificate_json(o);
            assert_eq!(cert["reason"], o.reason());
            assert!(cert["witness"].is_array());
        }
    }

    #[test]
    fn violation_document() {
        let doc = violation_json(&EmbeddingViolation::SumOutOfRange { vertex: 2, sum: 2 });
        assert_eq!(doc["violation"], "sum_out_of_range");
        assert_eq!(doc["vertices"], json!([2]));
        assert!(doc["message"].as_str().unwrap().contains("out of range"));
    }
}
