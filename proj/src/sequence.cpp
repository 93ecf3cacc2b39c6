#include "langtrack/sequence.hpp"

#include <sstream>

#include "langtrack/error.hpp"

namespace langtrack {

const std::array<const char*, kNumAttributes>& attribute_codes() {
  static const std::array<const char*, kNumAttributes> codes = {
      "CM", "ROT", "DEF", "FOC", "IV", "OV", "POC", "VC", "SV",
      "BC", "MB", "ARC", "LR", "FM", "AS", "TC", "MS"};
  return codes;
}

const char* attribute_code(Attribute a) {
  return attribute_codes()[static_cast<int>(a)];
}

std::optional<Attribute> parse_attribute(const std::string& code) {
  const auto& codes = attribute_codes();
  for (int i = 0; i < kNumAttributes; ++i) {
    if (code == codes[i]) return static_cast<Attribute>(i);
  }
  return std::nullopt;
}

std::string LanguageSentence::text() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

LanguageSentence LanguageSentence::from_text(const std::string& text) {
  LanguageSentence s;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    for (char& c : tok) {
      if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    }
    s.tokens.push_back(tok);
  }
  return s;
}

void SequenceRecord::validate() const {
  if (frames.empty()) throw Error("sequence '" + name + "': no frames");
  if (gt.size() != frames.size() || absent.size() != frames.size()) {
    throw Error("sequence '" + name + "': frames/gt/absent length mismatch (" +
                std::to_string(frames.size()) + "/" + std::to_string(gt.size()) +
                "/" + std::to_string(absent.size()) + ")");
  }
  if (sentence.tokens.empty()) {
    throw Error("sequence '" + name + "': empty language sentence");
  }
  for (const auto& box : gt) {
    if (!box.finite() || box.w < 0 || box.h < 0) {
      throw Error("sequence '" + name + "': invalid ground-truth box");
    }
  }
}

TrackerObservation TrackerObservation::zeros() {
  TrackerObservation o;
  o.result_image.assign(2700, 0.0f);
  o.response_map.assign(529, 0.0f);
  o.lang_embedding.assign(512, 0.0f);
  return o;
}

}  // namespace langtrack
