#ifndef CSPAR_ERRORS_HPP
#define CSPAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cspar {

// Failure categories raised by the library. The CLI maps all of them to
// exit code 2; verification failures are ordinary results, not errors.
enum class errc {
  not_binary,
  pair_out_of_range,
  domain_too_small,
  bad_cube_dim,
  empty_support,
  non_uniform_domains,
  bad_parameters,
  invalid_assignment,
  arity_mismatch,
  domain_conflict,
  too_large,
  not_a_partition,
  vertex_out_of_range,
  bad_epsilon,
  not_sparsifiable,
  not_bipartite,
  biclique_violation,
  not_singleton,
  invalid_witness,
  zero_value_assignment,
  no_unused_label,
  not_a_subinstance,
  not_a_subgraph_of_cover,
  parse_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace cspar

#endif
