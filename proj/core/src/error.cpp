#include "wod/error.hpp"

namespace wod {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ZeroOrder: return "ZeroOrder";
        case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::ZeroCopies: return "ZeroCopies";
        case Errc::MemberOutOfRange: return "MemberOutOfRange";
        case Errc::TooLarge: return "TooLarge";
        case Errc::AllIsolated: return "AllIsolated";
        case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
        case Errc::NotBipartite: return "NotBipartite";
        case Errc::EdgeWithinSide: return "EdgeWithinSide";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace wod
