#ifndef EFT_REPORT_HPP
#define EFT_REPORT_HPP

#include <json.hpp>

#include "eft/blocking.hpp"
#include "eft/emulator.hpp"
#include "eft/lbdc.hpp"
#include "eft/lower_bound.hpp"
#include "eft/scum.hpp"

namespace eft {

using Json = nlohmann::ordered_json;

// infinite and NaN lengths become null
Json length_json(double value);

Json to_json(const FaultSet& faults);
Json to_json(const Violation& violation);
Json to_json(const VerificationReport& report);
Json to_json(const Cycle& cycle);
Json to_json(const BlockingCounterexample& failure);
Json to_json(const CleanResult& result);
Json to_json(const ScumPath& path);
Json to_json(const StructureReport& report);
Json to_json(const LbdcTest& test);
Json to_json(const AdversarialFaults& attack);

std::string to_string(BlockingFailure failure);
std::string to_string(LbdcCondition condition);

}

#endif /* EFT_REPORT_HPP */
