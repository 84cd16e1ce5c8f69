#include "support/support.hpp"

#include "lpa/digraph_io.hpp"

namespace lpa::testing {

std::string fixture_path(const std::string& name) {
  return std::string(LPA_FIXTURE_DIR) + "/" + name + ".json";
}

Digraph load_fixture(const std::string& name) { return load_digraph_file(fixture_path(name)); }

}  // namespace lpa::testing
