#pragma once

// Named verification targets: each one exercises a closed-form family or a
// property suite end to end and throws with a witness on failure.

#include <string>
#include <vector>

namespace qhall {

struct VerifyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // failure witness, empty on success
};

const std::vector<std::string>& verify_names();

// runs one target by name; throws on unknown name
VerifyResult run_verify(const std::string& name);

std::vector<VerifyResult> run_all_verify();

}  // namespace qhall
