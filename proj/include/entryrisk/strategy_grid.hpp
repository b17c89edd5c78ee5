#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "entryrisk/errors.hpp"

namespace entryrisk {

/// Entry strategies, ordered by ascending I* interval.
enum class StrategyClass { GreenfieldInvestment = 0, Acquisition, MergerAcquisition, Cooperation, Export };

inline constexpr std::array<StrategyClass, 5> kAllStrategies = {
    StrategyClass::GreenfieldInvestment, StrategyClass::Acquisition, StrategyClass::MergerAcquisition,
    StrategyClass::Cooperation, StrategyClass::Export};

inline constexpr std::string_view to_string(StrategyClass s) {
    switch (s) {
        case StrategyClass::GreenfieldInvestment: return "GreenfieldInvestment";
        case StrategyClass::Acquisition: return "Acquisition";
        case StrategyClass::MergerAcquisition: return "MergerAcquisition";
        case StrategyClass::Cooperation: return "Cooperation";
        case StrategyClass::Export: return "Export";
    }
    return "?";
}

inline std::optional<StrategyClass> strategy_from_string(std::string_view name) {
    for (auto s : kAllStrategies) {
        if (to_string(s) == name) {
            return s;
        }
    }
    return std::nullopt;
}

struct StrategyDescription {
    std::string_view environment;
    std::string_view strategy;
};

inline constexpr StrategyDescription describe(StrategyClass s) {
    switch (s) {
        case StrategyClass::GreenfieldInvestment:
            return {"microeconomic environment likely to be entirely taken over", "direct greenfield investment"};
        case StrategyClass::Acquisition:
            return {"microeconomic environment likely to be entirely taken over by a buy of the majority of stocks "
                    "and joining the management team",
                    "acquisition"};
        case StrategyClass::MergerAcquisition:
            return {"microeconomic environment likely to be taken over at a equal rate to that of the partner",
                    "mergers, acquisitions"};
        case StrategyClass::Cooperation:
            return {"microeconomic environment favourable for economic cooperation",
                    "licensing, franchising, strategic alliances, management contract"};
        case StrategyClass::Export:
            return {"microeconomic environment hard to be approached through a partnership but favourable for "
                    "trading operations",
                    "export"};
    }
    return {"", ""};
}

/// Four ascending cut points on the I* axis separating the five strategies.
class GridBoundaries {
public:
    GridBoundaries() = default;

    explicit GridBoundaries(const std::array<double, 4>& cuts) : cuts_(cuts) {
        for (std::size_t i = 0; i < cuts_.size(); ++i) {
            if (!std::isfinite(cuts_[i])) {
                throw DomainError("grid boundary is not finite");
            }
            if (i > 0 && !(cuts_[i - 1] < cuts_[i])) {
                throw DomainError("grid boundaries must be strictly ascending");
            }
        }
    }

    [[nodiscard]] const std::array<double, 4>& cuts() const noexcept { return cuts_; }

    friend bool operator==(const GridBoundaries&, const GridBoundaries&) = default;

private:
    std::array<double, 4> cuts_{0.0, 1.6, 2.0, 5.0};
};

inline constexpr double kBoundaryHitTolerance = 1e-12;

struct Classification {
    StrategyClass strategy;
    bool boundary_hit;  ///< I* within 1e-12 of a cut; the half-open rule decided the class
};

/// Lower-inclusive half-open buckets: (-inf,c0) [c0,c1) [c1,c2) [c2,c3) [c3,inf).
inline Classification classify_detailed(double i_star, const GridBoundaries& grid = {}) {
    if (!std::isfinite(i_star)) {
        throw DomainError("I* must be finite");
    }
    const auto& cuts = grid.cuts();
    int bucket = 0;
    bool hit = false;
    for (double cut : cuts) {
        if (i_star >= cut) {
            ++bucket;
        }
        if (std::abs(i_star - cut) <= kBoundaryHitTolerance) {
            hit = true;
        }
    }
    return {static_cast<StrategyClass>(bucket), hit};
}

inline StrategyClass classify(double i_star, const GridBoundaries& grid = {}) {
    return classify_detailed(i_star, grid).strategy;
}

}  // namespace entryrisk
