#pragma once

#include "adelic/group.hpp"
#include "adelic/qmod1.hpp"

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace adelic {

/// An evaluable function G → {0} ∪ roots of unity.
class TraceFunction {
public:
    using Evaluator = std::function<CharValue(const GroupElement&)>;

    TraceFunction(std::shared_ptr<const LeviSystem> system, Evaluator eval, std::string name)
        : system_(std::move(system)), eval_(std::move(eval)), name_(std::move(name)) {}

    CharValue operator()(const GroupElement& g) const { return eval_(g); }

    const LeviSystem& system() const { return *system_; }
    const std::shared_ptr<const LeviSystem>& system_ptr() const { return system_; }
    const std::string& name() const { return name_; }

private:
    std::shared_ptr<const LeviSystem> system_;
    Evaluator eval_;
    std::string name_;
};

/// Trivial extension of a character of a finite central subgroup of L: value
/// on the listed (label, action) pairs, 0 elsewhere.
struct TildeCentralCharacter {
    struct Entry {
        std::size_t label = 0;
        RatMatrix action;
        Phase value;
    };
    std::vector<Entry> support;

    CharValue operator()(const LeviElement& l) const;
};

/// φ ≡ 1 on L_λ.
struct ConstantOne {};

/// Arbitrary φ ∈ Char(L_λ), supplied by the caller.
struct PluginCharacter {
    std::function<CharValue(const LeviElement&)> eval;
    std::string name = "plugin";
};

using LeviCharacter = std::variant<ConstantOne, TildeCentralCharacter, PluginCharacter>;

}  // namespace adelic
