// Walks the fusion subcategories of D(kS3) and prints each with its
// centralizer, computed by the S-matrix and by the coideal map.

#include <iostream>

#include "hopfcat/artifacts.hpp"
#include "hopfcat/category.hpp"

int main(int argc, char** argv) {
  using namespace hopfcat;
  Group g = parse_group_spec(argc > 1 ? argv[1] : "S3");
  Instance in = analyze_double(g);
  std::cout << "D(k" << g.name() << "): dim " << in.a().dim() << ", " << in.rank() << " simples, "
            << in.lattice.size() << " fusion subcategories\n";
  for (const auto& d : in.lattice) {
    auto by_s = centralizer(in, d.simples, CentralizerMethod::SMatrix);
    auto by_phi = centralizer(in, d.simples, CentralizerMethod::Phi);
    int c = in.subcat_index(by_s.simples);
    std::cout << subcat_label(in, d) << " fpdim " << d.fpdim << "  ->  " << subcat_label(in, in.lattice[c])
              << " fpdim " << by_s.fpdim << (by_s.simples == by_phi.simples ? "" : "  (phi disagrees)") << "\n";
  }
}
