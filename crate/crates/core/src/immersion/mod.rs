//! Complete-graph immersion: certificates, the exact search, the pod
//! verifier and the dock refuter.

mod certificate;
mod pod;
mod refute;
mod search;
mod symmetry;

pub use certificate::{verify_certificate, CertificateDefect, CornerPath, EdgeInstance, ImmersionCertificate};
pub use pod::{
    check_pairings, detect_gadgets, is_pod, is_pod_with, maximum_pairings, Gadget, GadgetKind,
    MatchingOutcome, PairingCheck, PodFailure, PodReport,
};
pub use refute::{check_special10, first_failure, refute_dock_graph, Claim, Decomposition, Refutation, Rule};
pub use search::{
    corner_split_infeasible, decide_corner_set, find_immersion, find_immersion_with, Budget,
    CornerSetVerdict, SearchOptions, SearchReport, SearchStats, SearchVerdict,
};
pub use symmetry::vertex_orbits;
