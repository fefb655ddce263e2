#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "archrec/scanner.hpp"

namespace archrec {

/// The 16 subsystem codes, in the fixed alphabetical order used by every
/// matrix and CSV axis. UNK is a sentinel for unmapped files, not a taxonomy
/// member.
enum class Subsystem : unsigned char {
    AUD,  // Audio
    COR,  // Core Systems
    DEB,  // Profiling and Debugging
    EDI,  // World Editor
    FES,  // Front End
    GMP,  // Gameplay Foundations
    HID,  // Human Interface Devices
    LLR,  // Low-Level Renderer
    OMP,  // Online Multiplayer
    PHY,  // Collision and Physics
    PLA,  // Platform Independence Layer
    RES,  // Resources
    SDK,  // Third-party SDKs
    SGC,  // Scene Graph / Culling Optimizations
    SKA,  // Skeletal Animation
    VFX,  // Visual Effects
    UNK,
};

inline constexpr int kSubsystemCount = 16;

std::string_view subsystem_code(Subsystem s);
std::string_view subsystem_name(Subsystem s);
std::optional<Subsystem> parse_subsystem(std::string_view code);
const std::array<Subsystem, kSubsystemCount>& all_subsystems();

/// Repo-relative path prefix -> subsystem. A prefix naming a full file path
/// acts as a per-file override and beats any directory rule.
struct MappingRule {
    std::string prefix;
    Subsystem code = Subsystem::UNK;

    friend bool operator==(const MappingRule&, const MappingRule&) = default;
};

class MappingTable {
public:
    MappingTable() = default;

    /// CSV with header row `path,subsystem`; `#` comment lines allowed.
    /// Throws Error (with line number) on duplicate prefix, unknown code or
    /// empty prefix.
    static MappingTable load(std::string_view csv_text);

    /// Longest segment-aligned prefix wins; no match -> UNK.
    Subsystem assign(const SourceFile& file) const;

    const std::vector<MappingRule>& rules() const { return rules_; }

private:
    std::vector<MappingRule> rules_;  // sorted by prefix
    std::unordered_map<std::string, Subsystem> by_prefix_;
};

struct DetectionSummary {
    std::array<std::size_t, kSubsystemCount> file_counts{};
    std::size_t unk_count = 0;
    std::vector<Subsystem> detected;    // codes with at least one file
    std::vector<Subsystem> undetected;
    std::vector<SourceFile> unmapped_files;

    std::string to_csv() const;  // code,files rows over the 16 codes + UNK
};

DetectionSummary detection_report(const std::vector<SourceFile>& files,
                                  const MappingTable& table);

}  // namespace archrec
