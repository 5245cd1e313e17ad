#include "abcircle/image.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace abcircle {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

void check_dims(const std::string& path, int w, int h) {
  if (w < 3 || h < 3) {
    fail(path, "image too small (need at least 3x3)");
  }
}

// Skips whitespace and '#' comment lines, then reads one non-negative int.
int next_pgm_int(std::istream& in) {
  for (;;) {
    const int ch = in.peek();
    if (ch == '#') {
      std::string line;
      std::getline(in, line);
    } else if (std::isspace(ch)) {
      in.get();
    } else {
      break;
    }
  }
  int value = -1;
  in >> value;
  return in ? value : -1;
}

GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");

  char magic[2] = {0, 0};
  in.read(magic, 2);
  const bool ascii = magic[1] == '2';
  if (magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5')) {
    fail(path, "unsupported format (expected PGM P2/P5 or PNG)");
  }

  const int w = next_pgm_int(in);
  const int h = next_pgm_int(in);
  const int maxval = next_pgm_int(in);
  if (w <= 0 || h <= 0 || maxval <= 0 || maxval > 255) {
    fail(path, "bad PGM header");
  }
  check_dims(path, w, h);

  GrayImage img;
  img.width = w;
  img.height = h;
  img.data.resize(static_cast<std::size_t>(w) * h);

  if (ascii) {
    for (auto& px : img.data) {
      const int v = next_pgm_int(in);
      if (v < 0 || v > maxval) fail(path, "truncated or invalid PGM data");
      px = static_cast<std::uint8_t>(v);
    }
  } else {
    in.get();  // single whitespace byte after maxval
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (in.gcount() != static_cast<std::streamsize>(img.data.size())) {
      fail(path, "truncated PGM data");
    }
  }
  if (maxval != 255) {
    for (auto& px : img.data) {
      px = static_cast<std::uint8_t>(std::lround(px * 255.0 / maxval));
    }
  }
  return img;
}

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

GrayImage load_png(const std::string& path) {
  FilePtr fp(std::fopen(path.c_str(), "rb"));
  if (!fp) fail(path, "cannot open file");

  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "libpng init failed");
  }

  std::vector<std::uint8_t> interleaved;
  int w = 0, h = 0, channels = 0;

  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "PNG decode error");
  }

  png_init_io(png, fp.get());
  png_read_info(png, info);

  w = static_cast<int>(png_get_image_width(png, info));
  h = static_cast<int>(png_get_image_height(png, info));
  const png_byte color = png_get_color_type(png, info);
  const png_byte depth = png_get_bit_depth(png, info);

  // Normalize everything to 8-bit gray or RGB without alpha.
  if (color == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color == PNG_COLOR_TYPE_GRAY && depth < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (depth == 16) png_set_strip_16(png);
  if (color & PNG_COLOR_MASK_ALPHA) png_set_strip_alpha(png);
  png_read_update_info(png, info);

  channels = png_get_channels(png, info);
  if (channels != 1 && channels != 3) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "unsupported PNG channel layout");
  }

  interleaved.resize(static_cast<std::size_t>(w) * h * channels);
  std::vector<png_bytep> rows(static_cast<std::size_t>(h));
  for (int y = 0; y < h; ++y) {
    rows[y] = interleaved.data() + static_cast<std::size_t>(y) * w * channels;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);

  check_dims(path, w, h);
  GrayImage img;
  img.width = w;
  img.height = h;
  img.data.resize(static_cast<std::size_t>(w) * h);
  if (channels == 1) {
    img.data.assign(interleaved.begin(), interleaved.end());
  } else {
    for (std::size_t i = 0; i < img.data.size(); ++i) {
      const double r = interleaved[3 * i];
      const double g = interleaved[3 * i + 1];
      const double b = interleaved[3 * i + 2];
      img.data[i] = static_cast<std::uint8_t>(
          std::lround(0.299 * r + 0.587 * g + 0.114 * b));
    }
  }
  return img;
}

}  // namespace

GrayImage load_image(const std::string& path) {
  std::ifstream probe(path, std::ios::binary);
  if (!probe) fail(path, "cannot open file");
  unsigned char sig[8] = {};
  probe.read(reinterpret_cast<char*>(sig), 8);
  probe.close();

  if (sig[0] == 'P' && (sig[1] == '2' || sig[1] == '5')) {
    return load_pgm(path);
  }
  if (png_sig_cmp(sig, 0, 8) == 0) {
    return load_png(path);
  }
  fail(path, "unsupported format (expected PGM P2/P5 or PNG)");
}

void save_pgm(const GrayImage& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open file for writing");
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
  if (!out) fail(path, "write failed");
}

void save_png_rgb(int width, int height, const std::vector<std::uint8_t>& rgb,
                  const std::string& path) {
  if (rgb.size() != static_cast<std::size_t>(width) * height * 3) {
    throw std::invalid_argument("save_png_rgb: buffer size mismatch");
  }
  FilePtr fp(std::fopen(path.c_str(), "wb"));
  if (!fp) fail(path, "cannot open file for writing");

  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "libpng init failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "PNG encode error");
  }

  png_init_io(png, fp.get());
  png_set_IHDR(png, info, static_cast<png_uint_32>(width),
               static_cast<png_uint_32>(height), 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (int y = 0; y < height; ++y) {
    png_write_row(png, const_cast<png_bytep>(
                           rgb.data() + static_cast<std::size_t>(y) * width * 3));
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
}

}  // namespace abcircle
