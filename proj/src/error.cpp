#include "pinloop/error.hpp"

namespace pinloop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::FixedPointInInvolution: return "FixedPointInInvolution";
    case ErrorCode::BadTransversalPairing: return "BadTransversalPairing";
    case ErrorCode::NonIntegerGenus: return "NonIntegerGenus";
    case ErrorCode::DanglingFreeCircleHost: return "DanglingFreeCircleHost";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::DisconnectedMap: return "DisconnectedMap";
    case ErrorCode::UnknownRegionId: return "UnknownRegionId";
    case ErrorCode::ResourceBudgetExceeded: return "ResourceBudgetExceeded";
    case ErrorCode::TooManyStrands: return "TooManyStrands";
    case ErrorCode::SelfLoopDetected: return "SelfLoopDetected";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::MatchingNotMaximum: return "MatchingNotMaximum";
    case ErrorCode::ComponentWithoutEdge: return "ComponentWithoutEdge";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::Not3Connected: return "Not3Connected";
    case ErrorCode::NotGenusZero: return "NotGenusZero";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::StateNotPinning: return "StateNotPinning";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pinloop
