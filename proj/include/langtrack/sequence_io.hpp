#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "langtrack/sequence.hpp"

namespace langtrack {

// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

// One tracker output line per frame: box plus confidence.
struct ResultEntry {
  BoundingBox box;
  double confidence = 0.0;
};

// Sequence directory layout:
//   imgs/%08d.png    frames, 1-indexed
//   groundtruth.txt  one "x1,y1,w,h" line per frame
//   absent.txt       one "0" or "1" line per frame
//   language.txt     one line, the sentence
//   attributes.txt   comma-separated attribute codes
void write_sequence(const SequenceRecord& record,
                    const std::filesystem::path& dir);
SequenceRecord read_sequence(const std::filesystem::path& dir);

// Result file: one "x1,y1,w,h,conf" line per frame, frame 1 included.
void write_results(const std::vector<ResultEntry>& results,
                   const std::filesystem::path& path);
std::vector<ResultEntry> read_results(const std::filesystem::path& path);

}  // namespace langtrack
