#include "numsgp/verify.hpp"

#include "numsgp/betti.hpp"
#include "numsgp/laws.hpp"
#include "numsgp/rf.hpp"
#include "numsgp/structure.hpp"

namespace numsgp {

std::vector<Report> verify_all(const NumericalSemigroup& sg) {
  std::vector<Report> out;
  PFData pf = sg.pseudo_frobenius();
  const std::size_t e = sg.embedding_dimension();

  out.push_back(verify_semigroup_laws(sg));
  out.push_back(verify_factorization_laws(sg));
  out.push_back(verify_rf_laws(sg));
  out.push_back(verify_betti_laws(sg));
  out.push_back(verify_type_bound(sg));
  out.push_back(verify_seven_gen(sg));
  out.push_back(verify_rf_generation(sg));

  if (e == 4 && pf.classification == Classification::PseudoSymmetric) {
    out.push_back(verify_type2_structure(sg));
  } else {
    Report r("type2-structure", sg.to_string());
    r.mark_not_applicable("not 4-generated pseudo-symmetric");
    out.push_back(r);
  }

  if (e == 4 && pf.almost_symmetric()) {
    out.push_back(verify_comparison(sg));
  } else {
    Report r("degree-comparison", sg.to_string());
    r.mark_not_applicable("not 4-generated almost symmetric");
    out.push_back(r);
  }

  Report cyclic("cyclic-rf", sg.to_string());
  if (e == 4 && pf.almost_symmetric() && pf.frobenius % 2 == 1) {
    try {
      cyclic = analyze_cyclic_rf(sg);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::PatternNotFound) throw;
      cyclic.mark_not_applicable(err.what());
    }
  } else {
    cyclic.mark_not_applicable("needs 4-generated almost symmetric with odd F");
  }
  out.push_back(cyclic);
  return out;
}

}  // namespace numsgp
