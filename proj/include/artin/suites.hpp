#pragma once

#include "artin/lcm_hom.hpp"
#include "artin/report.hpp"
#include "artin/workspace.hpp"

namespace artin {

// Checks on one map. Those taking an LcmHom report Rejected for maps whose
// axioms fail; the others run on any generator map.
Check check_axioms(const LcmHom& h);
Check check_generator_lcms(const GeneratorMap& m, std::size_t cutoff);
Check check_normal_forms(const GeneratorMap& m, std::size_t bound);
Check check_qf_injective(const GeneratorMap& m, std::size_t bound);
Check check_lattice(const LcmHom& h, std::size_t bound, std::size_t cutoff);
Check check_divisibility(const LcmHom& h, std::size_t bound);
Check check_fractions(const LcmHom& h, std::size_t count);
Check check_coxeter_injective(const LcmHom& h, std::size_t bound);
Check check_lemred(const LcmHom& h, int max_k);
Check check_salvetti_map(const LcmHom& h);
Check check_proccn(const LcmHom& h, int radius);
Check check_vertex_injective(const LcmHom& h, int radius);
Check check_group_injective(const LcmHom& h, int length_bound);

// Checks on one presentation.
Check check_delta(const PresentationPtr& p);
Check check_normal_paths(const PresentationPtr& p, int radius);
Check check_salvetti_order(const PresentationPtr& p);
Check check_fc_refusal(const PresentationPtr& p);
Check check_lcm_cutoff(const PresentationPtr& p, std::size_t cutoff);

Report map_suite(const GeneratorMap& m, const Options& o);
Report presentation_suite(const PresentationPtr& p, const Options& o);
/// Every presentation suite, then every map suite, in workspace order.
Report verify_all(const Workspace& ws, const Options& o);

}  // namespace artin
