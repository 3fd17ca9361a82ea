#include "eft/report.hpp"

#include <cmath>

namespace eft {

Json length_json(double value) {
    if (!std::isfinite(value)) {
        return nullptr;
    }
    return value;
}

Json to_json(const FaultSet& faults) {
    Json out = Json::array();
    for (EdgeId e : faults) {
        out.push_back(e);
    }
    return out;
}

Json to_json(const Violation& violation) {
    Json out;
    out["s"] = violation.s;
    out["t"] = violation.t;
    out["edge"] = violation.edge ? Json(*violation.edge) : Json(nullptr);
    out["achieved"] = length_json(violation.achieved);
    out["bound"] = length_json(violation.bound);
    return out;
}

Json to_json(const VerificationReport& report) {
    Json out;
    out["verdict"] = to_string(report.verdict);
    out["strategy"] = to_string(report.strategy);
    out["sets_checked"] = report.sets_checked;
    if (report.counterexample) {
        Json ce;
        ce["faults"] = to_json(report.counterexample->faults);
        ce["violation"] = to_json(report.counterexample->violation);
        out["counterexample"] = std::move(ce);
    } else {
        out["counterexample"] = nullptr;
    }
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    return out;
}

Json to_json(const Cycle& cycle) {
    Json out;
    out["nodes"] = cycle.nodes;
    out["edges"] = cycle.edges;
    return out;
}

std::string to_string(BlockingFailure failure) {
    return failure == BlockingFailure::unblocked_long ? "unblocked" : "singly_blocked_short";
}

std::string to_string(LbdcCondition condition) {
    return condition == LbdcCondition::long_paths ? "long_paths" : "short_paths";
}

Json to_json(const BlockingCounterexample& failure) {
    Json out;
    out["failure"] = to_string(failure.failure);
    out["cycle"] = to_json(failure.cycle);
    return out;
}

Json to_json(const CleanResult& result) {
    Json out;
    out["nodes"] = result.graph.node_count();
    out["edges"] = result.graph.edge_count();
    out["blocks"] = result.blocks.size();
    out["average_degree"] = result.average_degree;
    out["removed_for_blocks"] = result.removed_for_blocks;
    out["iterations"] = result.iterations;
    out["converged"] = result.converged;
    return out;
}

Json to_json(const ScumPath& path) {
    Json out;
    out["nodes"] = path.nodes;
    out["edges"] = path.edges;
    out["middle"] = path.middle;
    return out;
}

Json to_json(const StructureReport& report) {
    Json out;
    out["passed"] = report.passed();
    out["preconditions_met"] = report.preconditions_met;
    if (!report.precondition_note.empty()) {
        out["precondition_note"] = report.precondition_note;
    }
    out["two_path_bound_holds"] = report.two_path_bound_holds;
    out["max_two_paths"] = report.max_two_paths;
    if (report.two_path_witness) {
        out["two_path_witness"] = {report.two_path_witness->first, report.two_path_witness->second};
    }
    out["meets_internally_disjoint"] = report.meets_internally_disjoint;
    if (report.meet_witness) {
        out["meet_witness"] = {to_json(report.meet_witness->first),
                               to_json(report.meet_witness->second)};
    }
    Json metrics;
    metrics["scum_k_paths"] = report.scum_k_paths;
    metrics["scum_3_paths"] = report.scum_3_paths;
    metrics["scum_3_meets"] = report.scum_3_meets;
    metrics["core_edges"] = report.core_edge_count;
    metrics["average_degree"] = report.average_degree;
    metrics["counting_ratio"] = length_json(report.counting_ratio);
    metrics["meet_ratio"] = length_json(report.meet_ratio);
    out["metrics"] = std::move(metrics);
    return out;
}

Json to_json(const LbdcTest& test) {
    Json out;
    out["feasible"] = test.feasible;
    if (!test.feasible) {
        out["violated"] = to_string(test.violated);
        out["walk_nodes"] = test.nodes;
        out["walk_edges"] = test.edges;
    }
    return out;
}

Json to_json(const AdversarialFaults& attack) {
    Json out;
    out["cross"] = attack.cross;
    out["z_u"] = attack.z_u;
    out["z_v"] = attack.z_v;
    out["faults"] = to_json(attack.all);
    return out;
}

}
