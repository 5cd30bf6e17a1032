#pragma once

// Embedded copies of the blob fixtures shipped under fixtures/. The byte arrays
// here and the files on disk are generated from the same source and must stay
// byte-identical; regenerate both together if either changes.

#include <cstddef>

namespace ebb::fixtures {

inline constexpr unsigned char tiny_jpg[] = {
    0xFF, 0xD8, 0xFF, 0xE0, 0x00, 0x10, 0x4A, 0x46, 0x49, 0x46, 0x00, 0x01, 0x01, 0x00, 0x00, 0x01,
    0x00, 0x01, 0x00, 0x00, 0xFF, 0xDB, 0x00, 0x43, 0x00, 0x1B, 0x12, 0x14, 0x17, 0x14, 0x11, 0x1B,
    0x17, 0x16, 0x17, 0x1E, 0x1C, 0x1B, 0x20, 0x28, 0x42, 0x2B, 0x28, 0x25, 0x25, 0x28, 0x51, 0x3A,
    0x3D, 0x30, 0x42, 0x60, 0x55, 0x65, 0x64, 0x5F, 0x55, 0x5D, 0x5B, 0x6A, 0x78, 0x99, 0x81, 0x6A,
    0x71, 0x90, 0x73, 0x5B, 0x5D, 0x85, 0xB5, 0x86, 0x90, 0x9E, 0xA3, 0xAB, 0xAD, 0xAB, 0x67, 0x80,
    0xBC, 0xC9, 0xBA, 0xA6, 0xC7, 0x99, 0xA8, 0xAB, 0xA4, 0xFF, 0xDB, 0x00, 0x43, 0x01, 0x1C, 0x1E,
    0x1E, 0x28, 0x23, 0x28, 0x4E, 0x2B, 0x2B, 0x4E, 0xA4, 0x6E, 0x5D, 0x6E, 0xA4, 0xA4, 0xA4, 0xA4,
    0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4,
    0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4,
    0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xA4, 0xFF, 0xC0,
    0x00, 0x11, 0x08, 0x00, 0x40, 0x00, 0x40, 0x03, 0x01, 0x22, 0x00, 0x02, 0x11, 0x01, 0x03, 0x11,
    0x01, 0xFF, 0xC4, 0x00, 0x1F, 0x00, 0x00, 0x01, 0x05, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x00,
    0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08, 0x09,
    0x0A, 0x0B, 0xFF, 0xC4, 0x00, 0xB5, 0x10, 0x00, 0x02, 0x01, 0x03, 0x03, 0x02, 0x04, 0x03, 0x05,
    0x05, 0x04, 0x04, 0x00, 0x00, 0x01, 0x7D, 0x01, 0x02, 0x03, 0x00, 0x04, 0x11, 0x05, 0x12, 0x21,
    0x31, 0x41, 0x06, 0x13, 0x51, 0x61, 0x07, 0x22, 0x71, 0x14, 0x32, 0x81, 0x91, 0xA1, 0x08, 0x23,
    0x42, 0xB1, 0xC1, 0x15, 0x52, 0xD1, 0xF0, 0x24, 0x33, 0x62, 0x72, 0x82, 0x09, 0x0A, 0x16, 0x17,
    0x18, 0x19, 0x1A, 0x25, 0x26, 0x27, 0x28, 0x29, 0x2A, 0x34, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3A,
    0x43, 0x44, 0x45, 0x46, 0x47, 0x48, 0x49, 0x4A, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5A,
    0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69, 0x6A, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7A,
    0x83, 0x84, 0x85, 0x86, 0x87, 0x88, 0x89, 0x8A, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99,
    0x9A, 0xA2, 0xA3, 0xA4, 0xA5, 0xA6, 0xA7, 0xA8, 0xA9, 0xAA, 0xB2, 0xB3, 0xB4, 0xB5, 0xB6, 0xB7,
    0xB8, 0xB9, 0xBA, 0xC2, 0xC3, 0xC4, 0xC5, 0xC6, 0xC7, 0xC8, 0xC9, 0xCA, 0xD2, 0xD3, 0xD4, 0xD5,
    0xD6, 0xD7, 0xD8, 0xD9, 0xDA, 0xE1, 0xE2, 0xE3, 0xE4, 0xE5, 0xE6, 0xE7, 0xE8, 0xE9, 0xEA, 0xF1,
    0xF2, 0xF3, 0xF4, 0xF5, 0xF6, 0xF7, 0xF8, 0xF9, 0xFA, 0xFF, 0xC4, 0x00, 0x1F, 0x01, 0x00, 0x03,
    0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x01, 0x00, 0x00, 0x00, 0x00, 0x00, 0x00, 0x01,
    0x02, 0x03, 0x04, 0x05, 0x06, 0x07, 0x08, 0x09, 0x0A, 0x0B, 0xFF, 0xC4, 0x00, 0xB5, 0x11, 0x00,
    0x02, 0x01, 0x02, 0x04, 0x04, 0x03, 0x04, 0x07, 0x05, 0x04, 0x04, 0x00, 0x01, 0x02, 0x77, 0x00,
    0x01, 0x02, 0x03, 0x11, 0x04, 0x05, 0x21, 0x31, 0x06, 0x12, 0x41, 0x51, 0x07, 0x61, 0x71, 0x13,
    0x22, 0x32, 0x81, 0x08, 0x14, 0x42, 0x91, 0xA1, 0xB1, 0xC1, 0x09, 0x23, 0x33, 0x52, 0xF0, 0x15,
    0x62, 0x72, 0xD1, 0x0A, 0x16, 0x24, 0x34, 0xE1, 0x25, 0xF1, 0x17, 0x18, 0x19, 0x1A, 0x26, 0x27,
    0x28, 0x29, 0x2A, 0x35, 0x36, 0x37, 0x38, 0x39, 0x3A, 0x43, 0x44, 0x45, 0x46, 0x47, 0x48, 0x49,
    0x4A, 0x53, 0x54, 0x55, 0x56, 0x57, 0x58, 0x59, 0x5A, 0x63, 0x64, 0x65, 0x66, 0x67, 0x68, 0x69,
    0x6A, 0x73, 0x74, 0x75, 0x76, 0x77, 0x78, 0x79, 0x7A, 0x82, 0x83, 0x84, 0x85, 0x86, 0x87, 0x88,
    0x89, 0x8A, 0x92, 0x93, 0x94, 0x95, 0x96, 0x97, 0x98, 0x99, 0x9A, 0xA2, 0xA3, 0xA4, 0xA5, 0xA6,
    0xA7, 0xA8, 0xA9, 0xAA, 0xB2, 0xB3, 0xB4, 0xB5, 0xB6, 0xB7, 0xB8, 0xB9, 0xBA, 0xC2, 0xC3, 0xC4,
    0xC5, 0xC6, 0xC7, 0xC8, 0xC9, 0xCA, 0xD2, 0xD3, 0xD4, 0xD5, 0xD6, 0xD7, 0xD8, 0xD9, 0xDA, 0xE2,
    0xE3, 0xE4, 0xE5, 0xE6, 0xE7, 0xE8, 0xE9, 0xEA, 0xF2, 0xF3, 0xF4, 0xF5, 0xF6, 0xF7, 0xF8, 0xF9,
    0xFA, 0xFF, 0xDA, 0x00, 0x0C, 0x03, 0x01, 0x00, 0x02, 0x11, 0x03, 0x11, 0x00, 0x3F, 0x00, 0xE7,
    0x8E, 0x58, 0xE4, 0xD4, 0xA9, 0x18, 0x03, 0x73, 0x74, 0xF4, 0xA7, 0x24, 0x60, 0x0D, 0xCD, 0xD3,
    0xB0, 0xF5, 0xA5, 0x39, 0x63, 0x93, 0x5A, 0xB9, 0x72, 0xFE, 0xF2, 0xA6, 0xAD, 0xEC, 0xBF, 0x56,
    0x28, 0xCB, 0xA2, 0x1A, 0x72, 0xC7, 0x26, 0xA4, 0x48, 0xC0, 0x1B, 0x9B, 0xA7, 0x61, 0x4F, 0x48,
    0xC0, 0x1B, 0x9B, 0xA7, 0x61, 0x4A, 0x72, 0xC7, 0x26, 0xA1, 0xCB, 0x97, 0xF7, 0x95, 0x35, 0x6F,
    0x65, 0xFA, 0xB3, 0xA6, 0x32, 0xE8, 0x86, 0x1C, 0xB1, 0xC9, 0xA9, 0x52, 0x30, 0x06, 0xE6, 0xE9,
    0xD8, 0x53, 0xD2, 0x30, 0x06, 0xE6, 0xE9, 0xD8, 0x52, 0x9C, 0xB1, 0xC9, 0xA8, 0x72, 0xE5, 0xFD,
    0xE5, 0x4D, 0x5B, 0xD9, 0x7E, 0xAC, 0xEA, 0x8C, 0xBA, 0x21, 0x87, 0x2C, 0x72, 0x6A, 0x54, 0x8C,
    0x01, 0xB9, 0xBA, 0x76, 0x14, 0xE4, 0x8C, 0x01, 0xB9, 0xBA, 0x76, 0x14, 0xE3, 0x96, 0x39, 0x35,
    0x0E, 0x5C, 0xBF, 0xBC, 0xA9, 0xAB, 0x7B, 0x2F, 0xD5, 0x9D, 0x31, 0x97, 0x44, 0x50, 0x39, 0x63,
    0x93, 0x52, 0xA4, 0x60, 0x0D, 0xCD, 0xD3, 0xB0, 0xA7, 0x24, 0x60, 0x0D, 0xCD, 0xD3, 0xB0, 0xA7,
    0x1C, 0xB1, 0xC9, 0xAB, 0x72, 0xE5, 0xFD, 0xE5, 0x4D, 0x5B, 0xD9, 0x7E, 0xAC, 0xF9, 0xC8, 0xCB,
    0xA2, 0x18, 0x72, 0xC7, 0x26, 0xA4, 0x48, 0xC0, 0x1B, 0x9B, 0xA7, 0x61, 0x4F, 0x48, 0xC0, 0x1B,
    0x9B, 0xA7, 0x61, 0x4A, 0x72, 0xC7, 0x26, 0xA1, 0xCB, 0x97, 0xF7, 0x95, 0x35, 0x6F, 0x65, 0xFA,
    0xB3, 0xA6, 0x32, 0xE8, 0x86, 0x9C, 0xB1, 0xC9, 0xA9, 0x12, 0x30, 0x06, 0xE6, 0xE9, 0xD8, 0x53,
    0xD2, 0x30, 0x06, 0xE6, 0xE9, 0xE9, 0x4A, 0x72, 0xC7, 0x26, 0xA1, 0xCB, 0x97, 0xF7, 0x95, 0x35,
    0x6F, 0x65, 0xFA, 0xB3, 0xA6, 0x32, 0xE8, 0x86, 0x1C, 0xB1, 0xC9, 0xA9, 0x52, 0x30, 0x06, 0xE6,
    0xE9, 0xE9, 0x4E, 0x48, 0xC0, 0x1B, 0x9B, 0xA7, 0xA5, 0x38, 0xE5, 0x8E, 0x4D, 0x66, 0xE5, 0xCB,
    0xFB, 0xCA, 0x9A, 0xB7, 0xB2, 0xFD, 0x59, 0xD3, 0x19, 0x74, 0x45, 0x03, 0x96, 0x39, 0x35, 0x2A,
    0x46, 0x00, 0xDC, 0xDD, 0x3B, 0x0A, 0x7A, 0x46, 0x00, 0xDC, 0xDD, 0x3B, 0x0A, 0x53, 0x96, 0x39,
    0x35, 0xA3, 0x97, 0x2F, 0xEF, 0x2A, 0x6A, 0xDE, 0xCB, 0xF5, 0x67, 0xCE, 0x46, 0x5D, 0x10, 0xC3,
    0x96, 0x39, 0x35, 0x22, 0x46, 0x00, 0xDC, 0xDD, 0x3B, 0x0A, 0x7A, 0x46, 0x00, 0xDC, 0xDD, 0x3B,
    0x0A, 0x53, 0x96, 0x39, 0x35, 0x0E, 0x5C, 0xBF, 0xBC, 0xA9, 0xAB, 0x7B, 0x2F, 0xD5, 0x9D, 0x31,
    0x97, 0x44, 0x34, 0xE5, 0x8E, 0x4D, 0x48, 0x91, 0x80, 0x37, 0x37, 0x4E, 0xC2, 0x9E, 0x91, 0x80,
    0x37, 0x37, 0x4E, 0xC2, 0x94, 0xE5, 0x8E, 0x4D, 0x43, 0x97, 0x2F, 0xEF, 0x2A, 0x6A, 0xDE, 0xCB,
    0xF5, 0x67, 0x4C, 0x65, 0xD1, 0x0C, 0x39, 0x63, 0x93, 0x52, 0xA4, 0x60, 0x0D, 0xCD, 0xD3, 0xB0,
    0xA7, 0xA4, 0x60, 0x0D, 0xCD, 0xD3, 0xB0, 0xA5, 0x39, 0x63, 0x93, 0x59, 0xB9, 0x72, 0xFE, 0xF2,
    0xA6, 0xAD, 0xEC, 0xBF, 0x56, 0x74, 0xC6, 0x5D, 0x11, 0x40, 0xE5, 0x8E, 0x4D, 0x4A, 0x91, 0x80,
    0x37, 0x37, 0x4E, 0xC2, 0x9E, 0x91, 0x80, 0x37, 0x37, 0x4E, 0xC2, 0x94, 0xE5, 0x8E, 0x4D, 0x68,
    0xE5, 0xCB, 0xFB, 0xCA, 0x9A, 0xB7, 0xB2, 0xFD, 0x59, 0xF3, 0x91, 0x97, 0x44, 0x30, 0xE5, 0x8E,
    0x4D, 0x4A, 0x91, 0x80, 0x37, 0x37, 0x4E, 0xC2, 0x9C, 0x91, 0x80, 0x37, 0x37, 0x4F, 0x4A, 0x71,
    0xCB, 0x1C, 0x9A, 0x87, 0x2E, 0x5F, 0xDE, 0x54, 0xD5, 0xBD, 0x97, 0xEA, 0xCE, 0x98, 0xCB, 0xA2,
    0x18, 0x72, 0xC7, 0x26, 0xA4, 0x48, 0xC0, 0x1B, 0x9B, 0xA7, 0xA5, 0x3D, 0x23, 0x00, 0x6E, 0x6E,
    0x9D, 0x87, 0xAD, 0x29, 0xCB, 0x1C, 0x9A, 0xCD, 0xCB, 0x97, 0xF7, 0x95, 0x35, 0x6F, 0x65, 0xFA,
    0xB3, 0xAA, 0x32, 0xE8, 0x86, 0x9C, 0xB1, 0xC9, 0xA9, 0x12, 0x30, 0x06, 0xE6, 0xE9, 0xE9, 0x4F,
    0x48, 0xC0, 0x1B, 0x9B, 0xA7, 0x61, 0x4A, 0x72, 0xC7, 0x26, 0xA1, 0xCB, 0x97, 0xF7, 0x95, 0x35,
    0x6F, 0x65, 0xFA, 0xB3, 0xA6, 0x32, 0xE8, 0x8F, 0xFF, 0xD9,
};

inline constexpr std::size_t tiny_jpg_len = sizeof(tiny_jpg);

inline constexpr unsigned char chirp_wav[] = {
    0x52, 0x49, 0x46, 0x46, 0xB4, 0x01, 0x00, 0x00, 0x57, 0x41, 0x56, 0x45, 0x66, 0x6D, 0x74, 0x20,
    0x10, 0x00, 0x00, 0x00, 0x01, 0x00, 0x01, 0x00, 0x40, 0x1F, 0x00, 0x00, 0x40, 0x1F, 0x00, 0x00,
    0x01, 0x00, 0x08, 0x00, 0x64, 0x61, 0x74, 0x61, 0x90, 0x01, 0x00, 0x00, 0xC8, 0xC8, 0xC8, 0xC8,
    0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8,
    0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38,
    0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38,
    0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38,
    0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38,
    0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8,
    0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8,
    0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8,
    0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8,
    0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38,
    0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38,
    0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38,
    0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38,
    0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8,
    0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8,
    0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8,
    0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8,
    0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8,
    0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38,
    0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38,
    0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38,
    0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0x38,
    0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8,
    0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8, 0xC8,
    0xC8, 0xC8, 0xC8, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38, 0x38,
};

inline constexpr std::size_t chirp_wav_len = sizeof(chirp_wav);

}  // namespace ebb::fixtures
