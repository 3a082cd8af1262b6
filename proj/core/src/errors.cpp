#include "cspar/errors.hpp"

namespace cspar {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_binary: return "NotBinary";
    case errc::pair_out_of_range: return "PairOutOfRange";
    case errc::domain_too_small: return "DomainTooSmall";
    case errc::bad_cube_dim: return "BadCubeDim";
    case errc::empty_support: return "EmptySupport";
    case errc::non_uniform_domains: return "NonUniformDomains";
    case errc::bad_parameters: return "BadParameters";
    case errc::invalid_assignment: return "InvalidAssignment";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::domain_conflict: return "DomainConflict";
    case errc::too_large: return "TooLarge";
    case errc::not_a_partition: return "NotAPartition";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::bad_epsilon: return "BadEpsilon";
    case errc::not_sparsifiable: return "NotSparsifiable";
    case errc::not_bipartite: return "NotBipartite";
    case errc::biclique_violation: return "InternalBicliqueViolation";
    case errc::not_singleton: return "NotSingleton";
    case errc::invalid_witness: return "InvalidWitness";
    case errc::zero_value_assignment: return "ZeroValueAssignment";
    case errc::no_unused_label: return "NoUnusedLabel";
    case errc::not_a_subinstance: return "NotASubinstance";
    case errc::not_a_subgraph_of_cover: return "NotASubgraphOfCover";
    case errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace cspar
