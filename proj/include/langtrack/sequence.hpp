#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "langtrack/geometry.hpp"
#include "langtrack/image.hpp"

namespace langtrack {

// Per-sequence challenge tags.
enum class Attribute : int {
  kCM = 0,   // abrupt camera motion
  kROT,      // target rotates
  kDEF,      // deformable target
  kFOC,      // fully occluded
  kIV,       // illumination variation
  kOV,       // target leaves the frame
  kPOC,      // partially occluded
  kVC,       // viewpoint change
  kSV,       // scale variation
  kBC,       // background clutter
  kMB,       // motion blur
  kARC,      // aspect ratio leaves [0.5, 2]
  kLR,       // low resolution
  kFM,       // per-frame motion larger than the box
  kAS,       // adversarial-style noise on the target
  kTC,       // crossing object of similar intensity
  kMS,       // modality switch between color and thermal
};

inline constexpr int kNumAttributes = 17;

const std::array<const char*, kNumAttributes>& attribute_codes();
const char* attribute_code(Attribute a);
std::optional<Attribute> parse_attribute(const std::string& code);

// Lowercase whitespace-free tokens; never empty.
struct LanguageSentence {
  std::vector<std::string> tokens;

  std::string text() const;
  static LanguageSentence from_text(const std::string& text);

  bool operator==(const LanguageSentence&) const = default;
};

// One annotated video sequence: frames, per-frame ground truth and absent
// flags, challenge attributes, and the language description.
struct SequenceRecord {
  std::string name;
  std::vector<Frame> frames;
  std::vector<BoundingBox> gt;
  std::vector<bool> absent;
  std::set<Attribute> attributes;
  LanguageSentence sentence;

  std::size_t size() const { return frames.size(); }
  void validate() const;  // throws Error on invariant violation
};

// Per-frame bundle a tracker hands to the switch detector. Flattened sizes
// are fixed: 1 + 4 + 2700 + 529 + 512.
struct TrackerObservation {
  static constexpr int kResultImageSide = 30;
  static constexpr int kResponseMapSide = 23;
  static constexpr int kLangDim = 512;
  static constexpr int kFlatDim = 1 + 4 + 2700 + 529 + 512;  // 3746

  double confidence = 0.0;
  BoundingBox box;
  std::vector<float> result_image;   // 30*30*3 = 2700
  std::vector<float> response_map;   // 23*23  = 529
  std::vector<float> lang_embedding; // 512

  static TrackerObservation zeros();
  bool dims_ok() const {
    return result_image.size() == 2700 && response_map.size() == 529 &&
           lang_embedding.size() == 512;
  }
};

// Threshold axis paired with fraction-of-frames values.
struct MetricCurve {
  std::vector<double> thresholds;  // strictly increasing
  std::vector<double> values;      // fractions in [0, 1]
};

}  // namespace langtrack
