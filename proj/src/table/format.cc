#include "table/format.h"

#include "util/coding.h"

namespace lkv {

void EncodeValuePointer(const ValuePointer& p, char* dst) {
  uint32_t id_and_flags = p.vlog_file_id;
  if (p.flags & ValuePointer::kTombstoneFlag) id_and_flags |= 0x80000000u;
  PutFixed32(dst, id_and_flags);
  PutFixed64(dst + 4, p.offset);
  PutFixed32(dst + 12, p.length);
}

ValuePointer DecodeValuePointer(const char* src) {
  ValuePointer p;
  uint32_t id_and_flags = DecodeFixed32(src);
  p.vlog_file_id = id_and_flags & 0x7fffffffu;
  p.flags = (id_and_flags & 0x80000000u) ? ValuePointer::kTombstoneFlag : 0;
  p.offset = DecodeFixed64(src + 4);
  p.length = DecodeFixed32(src + 12);
  return p;
}

}  // namespace lkv
