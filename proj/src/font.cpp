// Copyright 2026 The Typobench Authors
// SPDX-License-Identifier: Apache-2.0

#include "typobench/font.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <vector>

#include "typobench/errors.hpp"

namespace typobench {

namespace {

// Big-endian reader with bounds checking over the whole font file.
class Reader {
 public:
  Reader(const std::uint8_t* data, std::size_t size) : data_(data), size_(size) {}

  std::uint8_t u8(std::size_t off) const {
    check(off, 1);
    return data_[off];
  }
  std::uint16_t u16(std::size_t off) const {
    check(off, 2);
    return static_cast<std::uint16_t>((data_[off] << 8) | data_[off + 1]);
  }
  std::int16_t i16(std::size_t off) const { return static_cast<std::int16_t>(u16(off)); }
  std::uint32_t u32(std::size_t off) const {
    check(off, 4);
    return (static_cast<std::uint32_t>(data_[off]) << 24) |
           (static_cast<std::uint32_t>(data_[off + 1]) << 16) |
           (static_cast<std::uint32_t>(data_[off + 2]) << 8) |
           static_cast<std::uint32_t>(data_[off + 3]);
  }
  std::size_t size() const { return size_; }

 private:
  void check(std::size_t off, std::size_t n) const {
    if (off + n > size_) {
      throw UnresolvableFont("truncated font file");
    }
  }
  const std::uint8_t* data_;
  std::size_t size_;
};

struct PointF {
  double x = 0;
  double y = 0;
  bool on_curve = true;
};

using Contour = std::vector<PointF>;

struct Segment {
  double x1, y1, x2, y2;
};

struct Affine {
  double a = 1, b = 0, c = 0, d = 1, e = 0, f = 0;

  PointF apply(const PointF& p) const {
    return PointF{a * p.x + c * p.y + e, b * p.x + d * p.y + f, p.on_curve};
  }
};

// Decodes one UTF-8 codepoint; malformed bytes decode as U+FFFD and consume
// a single byte so rendering never fails on odd input.
std::uint32_t next_codepoint(std::string_view text, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<std::uint8_t>(text[k]); };
  const std::uint8_t b0 = byte(i);
  if (b0 < 0x80) {
    i += 1;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return k < text.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    const std::uint32_t cp = ((b0 & 0x1Fu) << 6) | (byte(i + 1) & 0x3Fu);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    const std::uint32_t cp =
        ((b0 & 0x0Fu) << 12) | ((byte(i + 1) & 0x3Fu) << 6) | (byte(i + 2) & 0x3Fu);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    const std::uint32_t cp = ((b0 & 0x07u) << 18) | ((byte(i + 1) & 0x3Fu) << 12) |
                             ((byte(i + 2) & 0x3Fu) << 6) | (byte(i + 3) & 0x3Fu);
    i += 4;
    return cp;
  }
  i += 1;
  return 0xFFFD;
}

}  // namespace

struct Font::Impl {
  std::vector<std::uint8_t> bytes;
  std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> tables;  // tag -> (off, len)

  int units_per_em = 0;
  int index_to_loc_format = 0;
  int num_glyphs = 0;
  int number_of_h_metrics = 0;
  std::size_t cmap4_off = 0;  // offset of the format 4 subtable
  std::vector<std::size_t> loca;
  std::size_t glyf_off = 0;
  std::size_t glyf_len = 0;
  std::size_t hmtx_off = 0;

  Reader reader() const { return Reader(bytes.data(), bytes.size()); }

  std::pair<std::size_t, std::size_t> table(std::uint32_t tag, const char* name) const {
    auto it = tables.find(tag);
    if (it == tables.end()) {
      throw UnresolvableFont(std::string("font lacks required table: ") + name);
    }
    return it->second;
  }

  std::uint16_t glyph_for_codepoint(std::uint32_t cp) const;
  double advance_units(std::uint16_t gid) const;
  void append_glyph_contours(std::uint16_t gid, const Affine& xf, int depth,
                             std::vector<Contour>& out) const;
};

namespace {

constexpr std::uint32_t tag4(const char* s) {
  return (static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[0])) << 24) |
         (static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[1])) << 16) |
         (static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[2])) << 8) |
         static_cast<std::uint32_t>(static_cast<std::uint8_t>(s[3]));
}

}  // namespace

Font::Font() : impl_(std::make_unique<Impl>()) {}
Font::Font(Font&&) noexcept = default;
Font& Font::operator=(Font&&) noexcept = default;
Font::~Font() = default;

int Font::units_per_em() const { return impl_->units_per_em; }

Font Font::load(const std::filesystem::path& path) {
  Font font;
  Impl& im = *font.impl_;

  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw UnresolvableFont("cannot open font file: " + path.string());
  }
  im.bytes.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  const Reader r = im.reader();

  const std::uint32_t version = r.u32(0);
  if (version != 0x00010000 && version != tag4("true")) {
    throw UnresolvableFont("not a TrueType font: " + path.string());
  }
  const int num_tables = r.u16(4);
  for (int i = 0; i < num_tables; ++i) {
    const std::size_t rec = 12 + static_cast<std::size_t>(i) * 16;
    const std::uint32_t tag = r.u32(rec);
    const std::size_t off = r.u32(rec + 8);
    const std::size_t len = r.u32(rec + 12);
    if (off + len > im.bytes.size()) {
      throw UnresolvableFont("table extends past end of font file");
    }
    im.tables[tag] = {off, len};
  }

  const auto head = im.table(tag4("head"), "head");
  im.units_per_em = r.u16(head.first + 18);
  im.index_to_loc_format = r.i16(head.first + 50);
  if (im.units_per_em <= 0) {
    throw UnresolvableFont("font has invalid unitsPerEm");
  }

  const auto maxp = im.table(tag4("maxp"), "maxp");
  im.num_glyphs = r.u16(maxp.first + 4);

  const auto hhea = im.table(tag4("hhea"), "hhea");
  im.number_of_h_metrics = r.u16(hhea.first + 34);

  const auto hmtx = im.table(tag4("hmtx"), "hmtx");
  im.hmtx_off = hmtx.first;

  // Pick a Unicode BMP mapping: Windows Unicode first, then any Unicode
  // platform, then Windows symbol as a last resort.
  const auto cmap = im.table(tag4("cmap"), "cmap");
  const int num_subtables = r.u16(cmap.first + 2);
  std::size_t best = 0;
  int best_rank = -1;
  for (int i = 0; i < num_subtables; ++i) {
    const std::size_t rec = cmap.first + 4 + static_cast<std::size_t>(i) * 8;
    const int platform = r.u16(rec);
    const int encoding = r.u16(rec + 2);
    const std::size_t sub_off = cmap.first + r.u32(rec + 4);
    int rank = -1;
    if (platform == 3 && encoding == 1) {
      rank = 3;
    } else if (platform == 0) {
      rank = 2;
    } else if (platform == 3 && encoding == 0) {
      rank = 1;
    }
    if (rank > best_rank && r.u16(sub_off) == 4) {
      best_rank = rank;
      best = sub_off;
    }
  }
  if (best_rank < 0) {
    throw UnresolvableFont("font has no usable format 4 character map");
  }
  im.cmap4_off = best;

  const auto loca = im.table(tag4("loca"), "loca");
  const auto glyf = im.table(tag4("glyf"), "glyf");
  im.glyf_off = glyf.first;
  im.glyf_len = glyf.second;
  im.loca.resize(static_cast<std::size_t>(im.num_glyphs) + 1);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(im.num_glyphs); ++i) {
    if (im.index_to_loc_format == 0) {
      im.loca[i] = static_cast<std::size_t>(r.u16(loca.first + i * 2)) * 2;
    } else {
      im.loca[i] = r.u32(loca.first + i * 4);
    }
  }
  return font;
}

std::uint16_t Font::Impl::glyph_for_codepoint(std::uint32_t cp) const {
  if (cp > 0xFFFF) {
    return 0;
  }
  const Reader r = reader();
  const std::size_t sub = cmap4_off;
  const int seg_count = r.u16(sub + 6) / 2;
  const std::size_t end_codes = sub + 14;
  const std::size_t start_codes = end_codes + static_cast<std::size_t>(seg_count) * 2 + 2;
  const std::size_t id_deltas = start_codes + static_cast<std::size_t>(seg_count) * 2;
  const std::size_t id_range_offsets = id_deltas + static_cast<std::size_t>(seg_count) * 2;

  for (int seg = 0; seg < seg_count; ++seg) {
    const std::uint16_t end = r.u16(end_codes + static_cast<std::size_t>(seg) * 2);
    if (cp > end) {
      continue;
    }
    const std::uint16_t start = r.u16(start_codes + static_cast<std::size_t>(seg) * 2);
    if (cp < start) {
      return 0;
    }
    const std::uint16_t delta = r.u16(id_deltas + static_cast<std::size_t>(seg) * 2);
    const std::size_t range_pos = id_range_offsets + static_cast<std::size_t>(seg) * 2;
    const std::uint16_t range_offset = r.u16(range_pos);
    if (range_offset == 0) {
      return static_cast<std::uint16_t>((cp + delta) & 0xFFFF);
    }
    const std::size_t gid_pos = range_pos + range_offset + (cp - start) * 2;
    const std::uint16_t gid = r.u16(gid_pos);
    if (gid == 0) {
      return 0;
    }
    return static_cast<std::uint16_t>((gid + delta) & 0xFFFF);
  }
  return 0;
}

double Font::Impl::advance_units(std::uint16_t gid) const {
  const Reader r = reader();
  const int n = number_of_h_metrics;
  if (n <= 0) {
    return units_per_em / 2.0;
  }
  const int idx = std::min<int>(gid, n - 1);
  return r.u16(hmtx_off + static_cast<std::size_t>(idx) * 4);
}

void Font::Impl::append_glyph_contours(std::uint16_t gid, const Affine& xf, int depth,
                                       std::vector<Contour>& out) const {
  if (depth > 5 || gid >= loca.size() - 1) {
    return;
  }
  const std::size_t start = loca[gid];
  const std::size_t end = loca[gid + 1];
  if (start >= end) {
    return;  // glyph with no outline, e.g. space
  }
  const Reader r = reader();
  const std::size_t g = glyf_off + start;
  const int num_contours = r.i16(g);

  if (num_contours >= 0) {
    std::size_t off = g + 10;
    std::vector<int> end_pts(static_cast<std::size_t>(num_contours));
    for (int i = 0; i < num_contours; ++i) {
      end_pts[static_cast<std::size_t>(i)] = r.u16(off);
      off += 2;
    }
    const int num_points = num_contours == 0 ? 0 : end_pts.back() + 1;
    const int instruction_len = r.u16(off);
    off += 2 + static_cast<std::size_t>(instruction_len);

    std::vector<std::uint8_t> flags;
    flags.reserve(static_cast<std::size_t>(num_points));
    while (static_cast<int>(flags.size()) < num_points) {
      const std::uint8_t flag = r.u8(off++);
      flags.push_back(flag);
      if (flag & 0x08) {
        const int repeat = r.u8(off++);
        for (int k = 0; k < repeat; ++k) {
          flags.push_back(flag);
        }
      }
    }

    std::vector<PointF> points(static_cast<std::size_t>(num_points));
    int x = 0;
    for (int i = 0; i < num_points; ++i) {
      const std::uint8_t flag = flags[static_cast<std::size_t>(i)];
      if (flag & 0x02) {
        const int dx = r.u8(off++);
        x += (flag & 0x10) ? dx : -dx;
      } else if (!(flag & 0x10)) {
        x += r.i16(off);
        off += 2;
      }
      points[static_cast<std::size_t>(i)].x = x;
      points[static_cast<std::size_t>(i)].on_curve = (flag & 0x01) != 0;
    }
    int y = 0;
    for (int i = 0; i < num_points; ++i) {
      const std::uint8_t flag = flags[static_cast<std::size_t>(i)];
      if (flag & 0x04) {
        const int dy = r.u8(off++);
        y += (flag & 0x20) ? dy : -dy;
      } else if (!(flag & 0x20)) {
        y += r.i16(off);
        off += 2;
      }
      points[static_cast<std::size_t>(i)].y = y;
    }

    int first = 0;
    for (int ci = 0; ci < num_contours; ++ci) {
      const int last = end_pts[static_cast<std::size_t>(ci)];
      Contour contour;
      contour.reserve(static_cast<std::size_t>(last - first + 1));
      for (int i = first; i <= last; ++i) {
        contour.push_back(xf.apply(points[static_cast<std::size_t>(i)]));
      }
      if (contour.size() >= 2) {
        out.push_back(std::move(contour));
      }
      first = last + 1;
    }
    return;
  }

  // Composite glyph: each component references another glyph with an affine
  // placement. Point-matching arguments are rare and treated as zero offset.
  std::size_t off = g + 10;
  for (;;) {
    const std::uint16_t flags = r.u16(off);
    const std::uint16_t child = r.u16(off + 2);
    off += 4;
    double arg1 = 0;
    double arg2 = 0;
    if (flags & 0x0001) {  // ARG_1_AND_2_ARE_WORDS
      arg1 = r.i16(off);
      arg2 = r.i16(off + 2);
      off += 4;
    } else {
      arg1 = static_cast<std::int8_t>(r.u8(off));
      arg2 = static_cast<std::int8_t>(r.u8(off + 1));
      off += 2;
    }
    Affine local;
    const auto f2dot14 = [&](std::size_t p) { return r.i16(p) / 16384.0; };
    if (flags & 0x0008) {  // WE_HAVE_A_SCALE
      local.a = local.d = f2dot14(off);
      off += 2;
    } else if (flags & 0x0040) {  // MORE x/y scale
      local.a = f2dot14(off);
      local.d = f2dot14(off + 2);
      off += 4;
    } else if (flags & 0x0080) {  // 2x2 transform
      local.a = f2dot14(off);
      local.b = f2dot14(off + 2);
      local.c = f2dot14(off + 4);
      local.d = f2dot14(off + 6);
      off += 8;
    }
    if (flags & 0x0002) {  // ARGS_ARE_XY_VALUES
      local.e = arg1;
      local.f = arg2;
    }
    // Compose with the parent transform: parent(local(p)).
    Affine combined;
    combined.a = xf.a * local.a + xf.c * local.b;
    combined.b = xf.b * local.a + xf.d * local.b;
    combined.c = xf.a * local.c + xf.c * local.d;
    combined.d = xf.b * local.c + xf.d * local.d;
    combined.e = xf.a * local.e + xf.c * local.f + xf.e;
    combined.f = xf.b * local.e + xf.d * local.f + xf.f;
    append_glyph_contours(child, combined, depth + 1, out);
    if (!(flags & 0x0020)) {  // MORE_COMPONENTS
      break;
    }
  }
}

namespace {

// Flattens one contour of on/off curve points into line segments. Off-curve
// points are quadratic control points; consecutive off-curve points imply an
// on-curve midpoint between them.
void flatten_contour(const Contour& contour, std::vector<Segment>& segments) {
  const std::size_t n = contour.size();
  if (n < 2) {
    return;
  }

  // Expand implied midpoints so the list alternates on, off, on, off, ...
  std::vector<PointF> pts;
  pts.reserve(n * 2);
  std::size_t start = 0;
  bool have_start = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (contour[i].on_curve) {
      start = i;
      have_start = true;
      break;
    }
  }
  if (!have_start) {
    // All points are control points; start from the implied midpoint.
    PointF mid{(contour[0].x + contour[n - 1].x) / 2, (contour[0].y + contour[n - 1].y) / 2,
               true};
    pts.push_back(mid);
    for (std::size_t i = 0; i < n; ++i) {
      pts.push_back(contour[i]);
      const PointF& next = contour[(i + 1) % n];
      pts.push_back(PointF{(contour[i].x + next.x) / 2, (contour[i].y + next.y) / 2, true});
    }
  } else {
    pts.push_back(contour[start]);
    for (std::size_t k = 1; k <= n; ++k) {
      const PointF& cur = contour[(start + k) % n];
      const PointF& prev = pts.back();
      if (!cur.on_curve && !prev.on_curve) {
        pts.push_back(PointF{(prev.x + cur.x) / 2, (prev.y + cur.y) / 2, true});
      }
      pts.push_back(cur);
    }
    if (!pts.back().on_curve) {
      pts.push_back(pts.front());
    }
  }

  const auto emit_line = [&](const PointF& a, const PointF& b) {
    if (a.y != b.y) {
      segments.push_back(Segment{a.x, a.y, b.x, b.y});
    }
  };
  const auto emit_quad = [&](const PointF& a, const PointF& c, const PointF& b) {
    const double hull = std::hypot(c.x - a.x, c.y - a.y) + std::hypot(b.x - c.x, b.y - c.y);
    const int steps = std::clamp(static_cast<int>(std::ceil(hull / 0.3)), 1, 64);
    PointF prev = a;
    for (int s = 1; s <= steps; ++s) {
      const double t = static_cast<double>(s) / steps;
      const double u = 1.0 - t;
      PointF p;
      p.x = u * u * a.x + 2 * u * t * c.x + t * t * b.x;
      p.y = u * u * a.y + 2 * u * t * c.y + t * t * b.y;
      emit_line(prev, p);
      prev = p;
    }
  };

  std::size_t i = 0;
  while (i + 1 < pts.size()) {
    const PointF& a = pts[i];
    const PointF& next = pts[i + 1];
    if (next.on_curve) {
      emit_line(a, next);
      i += 1;
    } else {
      const PointF& b = pts[i + 2];
      emit_quad(a, next, b);
      i += 2;
    }
  }
  // Close the contour.
  emit_line(pts.back(), pts.front());
}

}  // namespace

GlyphBitmap Font::rasterize(std::string_view text, int size_px) const {
  if (text.empty()) {
    throw EmptyText("overlay text must be non-empty");
  }
  if (size_px <= 0) {
    throw Error("font size must be positive");
  }
  const Impl& im = *impl_;
  const double scale = static_cast<double>(size_px) / im.units_per_em;

  // Collect outlines for the whole string in font units, pen moving right.
  std::vector<Contour> contours;
  double pen_x = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::uint32_t cp = next_codepoint(text, i);
    const std::uint16_t gid = im.glyph_for_codepoint(cp);
    Affine placement;
    placement.e = pen_x;
    im.append_glyph_contours(gid, placement, 0, contours);
    pen_x += im.advance_units(gid);
  }

  // Device space: scale and flip y so rows run top to bottom.
  for (Contour& contour : contours) {
    for (PointF& p : contour) {
      p.x *= scale;
      p.y *= -scale;
    }
  }

  GlyphBitmap bitmap;
  if (contours.empty()) {
    bitmap.width = std::max(1, static_cast<int>(std::lround(pen_x * scale)));
    bitmap.height = 1;
    bitmap.coverage.assign(static_cast<std::size_t>(bitmap.width), 0.0f);
    return bitmap;
  }

  double min_x = contours[0][0].x, max_x = min_x;
  double min_y = contours[0][0].y, max_y = min_y;
  for (const Contour& contour : contours) {
    for (const PointF& p : contour) {
      min_x = std::min(min_x, p.x);
      max_x = std::max(max_x, p.x);
      min_y = std::min(min_y, p.y);
      max_y = std::max(max_y, p.y);
    }
  }
  const int x0 = static_cast<int>(std::floor(min_x));
  const int y0 = static_cast<int>(std::floor(min_y));
  const int w = std::max(1, static_cast<int>(std::ceil(max_x)) - x0);
  const int h = std::max(1, static_cast<int>(std::ceil(max_y)) - y0);

  std::vector<Segment> segments;
  for (const Contour& contour : contours) {
    flatten_contour(contour, segments);
  }
  for (Segment& s : segments) {
    s.x1 -= x0;
    s.y1 -= y0;
    s.x2 -= x0;
    s.y2 -= y0;
  }

  // 4x4 supersampled nonzero-winding fill. For each sample row, gather the
  // x positions where segments cross it, then sweep left to right keeping a
  // running winding number.
  constexpr int kSub = 4;
  std::vector<int> hits(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::pair<double, int>> crossings;
  for (int sy_idx = 0; sy_idx < h * kSub; ++sy_idx) {
    const double sy = (sy_idx + 0.5) / kSub;
    crossings.clear();
    for (const Segment& s : segments) {
      int dir = 0;
      if (s.y1 <= sy && sy < s.y2) {
        dir = 1;
      } else if (s.y2 <= sy && sy < s.y1) {
        dir = -1;
      } else {
        continue;
      }
      const double t = (sy - s.y1) / (s.y2 - s.y1);
      crossings.emplace_back(s.x1 + t * (s.x2 - s.x1), dir);
    }
    if (crossings.empty()) {
      continue;
    }
    std::sort(crossings.begin(), crossings.end());
    std::size_t ci = 0;
    int winding = 0;
    const int row = sy_idx / kSub;
    for (int sx_idx = 0; sx_idx < w * kSub; ++sx_idx) {
      const double sx = (sx_idx + 0.5) / kSub;
      while (ci < crossings.size() && crossings[ci].first <= sx) {
        winding += crossings[ci].second;
        ++ci;
      }
      if (winding != 0) {
        ++hits[static_cast<std::size_t>(row) * w + sx_idx / kSub];
      }
    }
  }

  bitmap.width = w;
  bitmap.height = h;
  bitmap.coverage.resize(static_cast<std::size_t>(w) * h);
  for (std::size_t k = 0; k < bitmap.coverage.size(); ++k) {
    bitmap.coverage[k] = static_cast<float>(hits[k]) / (kSub * kSub);
  }
  return bitmap;
}

GlyphBitmap rasterize_typo(const Font& font, std::string_view text, int size_px) {
  return font.rasterize(text, size_px);
}

}  // namespace typobench
