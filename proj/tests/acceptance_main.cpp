#include <iostream>
#include "modinv/runner.hpp"
int main() {
  modinv::VerifyOutcome out = modinv::run_verify(modinv::Caps{}, std::nullopt,
                                                 MODINV_GOLDEN_DIR, &std::cerr);
  for (auto& c : out.criteria)
    std::cout << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << " criterion " << c.id
              << ": " << c.name << " [" << c.detail << "]\n";
  return out.all_passed ? 0 : 1;
}
