#include "sigmafix/trace.hpp"

#include <sstream>

namespace sigmafix::sigma {

std::string answerName(Answer a) {
    switch (a) {
        case Answer::Yes: return "Yes";
        case Answer::No: return "No";
        default: return "Unknown";
    }
}

std::string sigmaSymbol(Flavor flavor, unsigned n) {
    std::ostringstream os;
    os << "Sigma^" << n;
    if (flavor == Flavor::Homological) os << "(-,Z)";
    return os.str();
}

std::string typeSymbol(Flavor flavor, unsigned n) {
    std::ostringstream os;
    os << (flavor == Flavor::Homotopical ? "F_" : "FP_") << n;
    return os.str();
}

void Trace::add(const char* ruleId, const char* citation, std::string note) {
    steps.push_back(RuleApplication{ruleId, citation, std::move(note)});
}

void Trace::absorb(const Trace& other) {
    steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

bool Trace::cites(const std::string& ruleId) const {
    return firstIndex(ruleId).has_value();
}

std::optional<std::size_t> Trace::firstIndex(const std::string& ruleId) const {
    for (std::size_t i = 0; i < steps.size(); ++i)
        if (steps[i].ruleId == ruleId) return i;
    return std::nullopt;
}

std::string Trace::toString() const {
    std::ostringstream os;
    for (const RuleApplication& s : steps) {
        os << "[" << s.ruleId << "] " << s.citation;
        if (!s.note.empty()) os << " — " << s.note;
        os << "\n";
    }
    return os.str();
}

Verdict Verdict::yes(Trace t) {
    Verdict v;
    v.answer = Answer::Yes;
    v.trace = std::move(t);
    return v;
}

Verdict Verdict::no(Trace t) {
    Verdict v;
    v.answer = Answer::No;
    v.trace = std::move(t);
    return v;
}

Verdict Verdict::unknown(std::string reason, Trace t) {
    Verdict v;
    v.answer = Answer::Unknown;
    v.trace = std::move(t);
    v.unknownReason = std::move(reason);
    return v;
}

}  // namespace sigmafix::sigma
