#ifndef CSPAR_JSON_IO_HPP
#define CSPAR_JSON_IO_HPP

#include <filesystem>
#include <optional>
#include <string>

#include "cspar/csp.hpp"
#include "cspar/hardness.hpp"
#include "cspar/predicate.hpp"
#include "cspar/sparsify.hpp"

namespace cspar::io {

// All readers reject unknown keys, duplicate support tuples, and duplicate
// scopes. Writers emit a fixed key order and sorted support, so a
// write-read-write cycle is byte-identical.

KaryPredicate predicate_from_json(const std::string& text);
std::string predicate_to_json(const KaryPredicate& p);
KaryPredicate read_predicate_file(const std::filesystem::path& path);
void write_predicate_file(const std::filesystem::path& path, const KaryPredicate& p);

struct InstanceDocument {
  CspInstance instance;
  std::optional<SparsifierReport> report;  // present in sparsifier output files
};

/// base_dir resolves a predicate file reference ("predicate": "file.json");
/// an empty base_dir resolves against the current directory.
InstanceDocument instance_from_json(const std::string& text,
                                    const std::filesystem::path& base_dir = {});
std::string instance_to_json(const CspInstance& inst,
                             const SparsifierReport* report = nullptr);
InstanceDocument read_instance_file(const std::filesystem::path& path);
void write_instance_file(const std::filesystem::path& path, const CspInstance& inst,
                         const SparsifierReport* report = nullptr);

/// Inspection bundle for a sparsifiable binary predicate: auxiliary graph,
/// bipartite complement, complement components, and the colouring table.
std::string cover_bundle_to_json(const KaryPredicate& p);

std::string certificate_to_json(const LowerBoundCertificate& cert);

}  // namespace cspar::io

#endif
