#pragma once

#include "leray/errors.hpp"
#include "leray/pipeline.hpp"

namespace leray {

// JSON artifacts of each stage. None carry timings, so equal inputs give
// byte-identical files.
Json check_report(Pipeline& pl);
Json phase_report(Pipeline& pl);
Json map_report(Pipeline& pl);
Json milnor_report(Pipeline& pl);
Json gm_report(Pipeline& pl);
Json discriminant_report(Pipeline& pl);
Json front_report(Pipeline& pl);
Json verify_discriminant_report(Pipeline& pl);

struct RayVerification {
  Json report;
  std::string csv;
  bool passed = false;
};
RayVerification verify_rays(Pipeline& pl);

Json error_record(ErrorCode code, const std::string& message);

}  // namespace leray
