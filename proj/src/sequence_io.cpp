#include "langtrack/sequence_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "langtrack/error.hpp"
#include "langtrack/png_io.hpp"

namespace langtrack {

namespace fs = std::filesystem;

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

double parse_double(const std::string& text, const std::string& file,
                    long line) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last) {
    throw ParseError(file, line, "bad number '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> read_lines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), -1, "cannot open");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // Ignore a single trailing blank line.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string frame_file_name(std::size_t index1) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%08zu.png", index1);
  return buf;
}

}  // namespace

void write_sequence(const SequenceRecord& record, const fs::path& dir) {
  record.validate();
  fs::create_directories(dir / "imgs");

  for (std::size_t i = 0; i < record.frames.size(); ++i) {
    write_png((dir / "imgs" / frame_file_name(i + 1)).string(),
              record.frames[i]);
  }

  {
    std::ofstream out(dir / "groundtruth.txt");
    for (const auto& b : record.gt) {
      out << format_double(b.x1) << ',' << format_double(b.y1) << ','
          << format_double(b.w) << ',' << format_double(b.h) << '\n';
    }
  }
  {
    std::ofstream out(dir / "absent.txt");
    for (bool a : record.absent) out << (a ? '1' : '0') << '\n';
  }
  {
    std::ofstream out(dir / "language.txt");
    out << record.sentence.text() << '\n';
  }
  {
    std::ofstream out(dir / "attributes.txt");
    bool first = true;
    for (Attribute a : record.attributes) {
      if (!first) out << ',';
      out << attribute_code(a);
      first = false;
    }
    out << '\n';
  }
  {
    // Thermal ranges are stored alongside so modality survives a round-trip.
    std::ofstream out(dir / "modality.txt");
    for (const auto& f : record.frames) {
      out << (f.modality == Modality::kThermal ? '1' : '0') << '\n';
    }
  }
}

SequenceRecord read_sequence(const fs::path& dir) {
  SequenceRecord record;
  record.name = dir.filename().string();

  const auto gt_path = dir / "groundtruth.txt";
  const auto gt_lines = read_lines(gt_path);
  std::size_t n_frames = 0;
  while (fs::exists(dir / "imgs" / frame_file_name(n_frames + 1))) ++n_frames;
  if (n_frames == 0) throw ParseError((dir / "imgs").string(), -1, "no frames");
  if (gt_lines.size() != n_frames) {
    throw ParseError(gt_path.string(), static_cast<long>(gt_lines.size()),
                     "expected " + std::to_string(n_frames) +
                         " ground-truth lines, found " +
                         std::to_string(gt_lines.size()));
  }

  for (std::size_t i = 0; i < n_frames; ++i) {
    record.frames.push_back(
        read_png((dir / "imgs" / frame_file_name(i + 1)).string()));
  }

  for (std::size_t i = 0; i < gt_lines.size(); ++i) {
    const auto parts = split(gt_lines[i], ',');
    if (parts.size() != 4) {
      throw ParseError(gt_path.string(), static_cast<long>(i + 1),
                       "expected 4 comma-separated values");
    }
    BoundingBox b;
    b.x1 = parse_double(parts[0], gt_path.string(), static_cast<long>(i + 1));
    b.y1 = parse_double(parts[1], gt_path.string(), static_cast<long>(i + 1));
    b.w = parse_double(parts[2], gt_path.string(), static_cast<long>(i + 1));
    b.h = parse_double(parts[3], gt_path.string(), static_cast<long>(i + 1));
    record.gt.push_back(b);
  }

  const auto absent_path = dir / "absent.txt";
  const auto absent_lines = read_lines(absent_path);
  if (absent_lines.size() != n_frames) {
    throw ParseError(absent_path.string(),
                     static_cast<long>(absent_lines.size()),
                     "expected " + std::to_string(n_frames) +
                         " absent lines, found " +
                         std::to_string(absent_lines.size()));
  }
  for (std::size_t i = 0; i < absent_lines.size(); ++i) {
    if (absent_lines[i] == "0") {
      record.absent.push_back(false);
    } else if (absent_lines[i] == "1") {
      record.absent.push_back(true);
    } else {
      throw ParseError(absent_path.string(), static_cast<long>(i + 1),
                       "expected 0 or 1, found '" + absent_lines[i] + "'");
    }
  }

  const auto lang_lines = read_lines(dir / "language.txt");
  if (lang_lines.empty()) {
    throw ParseError((dir / "language.txt").string(), 1, "missing sentence");
  }
  record.sentence = LanguageSentence::from_text(lang_lines[0]);

  const auto attr_path = dir / "attributes.txt";
  if (fs::exists(attr_path)) {
    const auto attr_lines = read_lines(attr_path);
    if (!attr_lines.empty() && !attr_lines[0].empty()) {
      for (const auto& code : split(attr_lines[0], ',')) {
        auto a = parse_attribute(code);
        if (!a) {
          throw ParseError(attr_path.string(), 1,
                           "unknown attribute code '" + code + "'");
        }
        record.attributes.insert(*a);
      }
    }
  }

  const auto modality_path = dir / "modality.txt";
  if (fs::exists(modality_path)) {
    const auto lines = read_lines(modality_path);
    for (std::size_t i = 0; i < lines.size() && i < record.frames.size(); ++i) {
      if (lines[i] == "1") record.frames[i].modality = Modality::kThermal;
    }
  }

  record.validate();
  return record;
}

void write_results(const std::vector<ResultEntry>& results,
                   const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path.string());
  for (const auto& r : results) {
    out << format_double(r.box.x1) << ',' << format_double(r.box.y1) << ','
        << format_double(r.box.w) << ',' << format_double(r.box.h) << ','
        << format_double(r.confidence) << '\n';
  }
}

std::vector<ResultEntry> read_results(const fs::path& path) {
  const auto lines = read_lines(path);
  std::vector<ResultEntry> out;
  out.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto parts = split(lines[i], ',');
    if (parts.size() != 5) {
      throw ParseError(path.string(), static_cast<long>(i + 1),
                       "expected 5 comma-separated values");
    }
    ResultEntry e;
    e.box.x1 = parse_double(parts[0], path.string(), static_cast<long>(i + 1));
    e.box.y1 = parse_double(parts[1], path.string(), static_cast<long>(i + 1));
    e.box.w = parse_double(parts[2], path.string(), static_cast<long>(i + 1));
    e.box.h = parse_double(parts[3], path.string(), static_cast<long>(i + 1));
    e.confidence =
        parse_double(parts[4], path.string(), static_cast<long>(i + 1));
    out.push_back(e);
  }
  return out;
}

}  // namespace langtrack
