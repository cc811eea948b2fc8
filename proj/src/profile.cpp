#include "blockade/profile.hpp"

#include "blockade/errors.hpp"

namespace blockade {

ConstantsProfile ConstantsProfile::by_name(const std::string& name) {
    if (name == "demo-small" || name.empty()) return demo_small();
    if (name == "paper") return paper();
    throw parse_error("unknown constants profile: " + name);
}

std::map<std::string, Rat> ConstantsProfile::entries() const {
    return {
        {"d", Rat(d)}, {"c", c},         {"eta", eta}, {"xi", xi},
        {"a", Rat(a)}, {"t", Rat(t)},    {"theta", theta},
    };
}

void ConstantsProfile::apply_override(const std::string& symbol, const Rat& value) {
    if (value <= 0) throw precondition_violated("profile override must be positive");
    if (symbol == "d")
        d = rat_floor(value);
    else if (symbol == "c")
        c = value;
    else if (symbol == "eta")
        eta = value;
    else if (symbol == "xi")
        xi = value;
    else if (symbol == "a")
        a = rat_floor(value);
    else if (symbol == "t")
        t = rat_floor(value);
    else if (symbol == "theta")
        theta = value;
    else
        throw parse_error("unknown profile symbol: " + symbol);
    if (!demo)
        throw precondition_violated("paper profile entries are fixed; use a demo profile");
}

}  // namespace blockade
