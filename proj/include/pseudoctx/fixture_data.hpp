#ifndef PSEUDOCTX_FIXTURE_DATA_HPP
#define PSEUDOCTX_FIXTURE_DATA_HPP

// Published coordinates and set representations, evaluated from their closed
// forms to 17 significant digits. Do not edit by hand.

#include <vector>

#include "pseudoctx/vec3.hpp"

namespace pseudoctx::fixture_data
{

// Set representation of the 15-atom gadget over its 24 two-valued states.
inline const std::vector<std::vector<int>>& small_partition_sets()
{
    static const std::vector<std::vector<int>> data{
        // b1
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
        // b2
        {11, 12, 13, 14, 15, 16, 17, 18},
        // b3
        {19, 20, 21, 22, 23, 24},
        // b4
        {1, 2, 3, 4, 11, 12, 13, 14},
        // b5
        {5, 6, 7, 8, 9, 10, 15, 16, 17, 18},
        // b6
        {1, 5, 6, 11, 12, 15, 16, 17, 19, 20},
        // b7
        {2, 3, 7, 8, 9, 21, 22, 23},
        // b8
        {4, 10, 13, 14, 18, 24},
        // b9
        {5, 7, 8, 15, 16, 19, 21, 22},
        // b10
        {1, 2, 3, 6, 9, 11, 12, 17, 20, 23},
        // b11
        {2, 7, 9, 11, 13, 15, 17, 18, 21, 23},
        // b12
        {1, 4, 5, 6, 10, 19, 20, 24},
        // b13
        {3, 8, 12, 14, 16, 22},
        // b14
        {6, 9, 10, 17, 18, 20, 23, 24},
        // b15
        {1, 2, 4, 5, 7, 11, 13, 15, 19, 21},
    };
    return data;
}

// Set representation of the 36-atom combo over its 225 two-valued states.
inline const std::vector<std::vector<int>>& combo_partition_sets()
{
    static const std::vector<std::vector<int>> data{
        // b1
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
            17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32,
            33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48,
            49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64,
            65, 66, 67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80,
            81, 82, 83, 84, 85, 86},
        // b2
        {87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100, 101, 102,
            103, 104, 105, 106, 107, 108, 109, 110, 111, 112, 113, 114, 115, 116, 117, 118,
            119, 120, 121, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131, 132, 133, 134,
            135, 136, 137, 138, 139, 140, 141, 142, 143, 144, 145, 146, 147, 148, 149, 150,
            151, 152, 153, 154, 155, 156, 157, 158, 159, 160, 161},
        // b3
        {162, 163, 164, 165, 166, 167, 168, 169, 170, 171, 172, 173, 174, 175, 176, 177,
            178, 179, 180, 181, 182, 183, 184, 185, 186, 187, 188, 189, 190, 191, 192, 193,
            194, 195, 196, 197, 198, 199, 200, 201, 202, 203, 204, 205, 206, 207, 208, 209,
            210, 211, 212, 213, 214, 215, 216, 217, 218, 219, 220, 221, 222, 223, 224, 225},
        // b4
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
            17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 27, 28, 29, 30, 31, 32,
            33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48,
            49, 50, 87, 88, 89, 90, 91, 92, 93, 94, 95, 96, 97, 98, 99, 100,
            101, 102, 103, 104, 105, 106, 107, 108, 109, 110, 111, 112, 113, 114, 115, 116,
            117, 118, 119, 120, 121, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131, 132,
            133},
        // b5
        {51, 52, 53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 63, 64, 65, 66,
            67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 81, 82,
            83, 84, 85, 86, 134, 135, 136, 137, 138, 139, 140, 141, 142, 143, 144, 145,
            146, 147, 148, 149, 150, 151, 152, 153, 154, 155, 156, 157, 158, 159, 160, 161},
        // b6
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16,
            17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 87, 88, 89, 90, 91, 92,
            93, 94, 95, 96, 97, 98, 99, 100, 101, 102, 103, 104, 105, 106, 107, 162,
            163, 164, 165, 166, 167, 168, 169, 170, 171, 172, 173, 174, 175, 176, 177, 178,
            179, 180, 181, 182, 183, 184, 185, 186, 187, 188, 189},
        // b7
        {27, 28, 29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42,
            43, 44, 45, 46, 47, 48, 49, 50, 108, 109, 110, 111, 112, 113, 114, 115,
            116, 117, 118, 119, 120, 121, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131,
            132, 133, 190, 191, 192, 193, 194, 195, 196, 197, 198, 199, 200, 201, 202, 203,
            204, 205, 206, 207, 208, 209, 210, 211, 212, 213, 214, 215, 216, 217, 218, 219,
            220, 221, 222, 223, 224, 225},
        // b8
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 51, 52,
            53, 54, 55, 56, 57, 58, 59, 60, 61, 62, 87, 88, 89, 90, 91, 92,
            93, 94, 95, 96, 97, 98, 99, 100, 101, 134, 135, 136, 137, 138, 139, 140,
            141, 142, 143, 144, 145, 146, 147, 162, 163, 164, 165, 166, 167, 168, 169, 170,
            171, 172, 173, 174, 175, 176, 177, 178, 179, 180, 181},
        // b9
        {15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26, 63, 64, 65, 66,
            67, 68, 69, 70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 81, 82,
            83, 84, 85, 86, 102, 103, 104, 105, 106, 107, 148, 149, 150, 151, 152, 153,
            154, 155, 156, 157, 158, 159, 160, 161, 182, 183, 184, 185, 186, 187, 188, 189},
        // b10
        {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 27, 28,
            29, 30, 31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43, 44,
            45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55, 56, 57, 58, 59, 60,
            61, 62, 87, 88, 89, 90, 91, 92, 93, 94, 95, 108, 109, 110, 111, 112,
            113, 114, 115, 116, 117, 118, 119, 120, 121, 134, 135, 136, 137, 138, 139, 162,
            163, 164, 165, 166, 167, 190, 191, 192, 193, 194, 195, 196, 197, 198, 199, 200,
            201},
        // b11
        {96, 97, 98, 99, 100, 101, 122, 123, 124, 125, 126, 127, 128, 129, 130, 131,
            132, 133, 140, 141, 142, 143, 144, 145, 146, 147, 168, 169, 170, 171, 172, 173,
            174, 175, 176, 177, 178, 179, 180, 181, 202, 203, 204, 205, 206, 207, 208, 209,
            210, 211, 212, 213, 214, 215, 216, 217, 218, 219, 220, 221, 222, 223, 224, 225},
        // b12
        {87, 88, 89, 90, 91, 92, 93, 94, 95, 102, 103, 104, 105, 106, 107, 108,
            109, 110, 111, 112, 113, 114, 115, 116, 117, 118, 119, 120, 121, 134, 135, 136,
            137, 138, 139, 148, 149, 150, 151, 152, 153, 154, 155, 156, 157, 158, 159, 160,
            161, 162, 163, 164, 165, 166, 167, 182, 183, 184, 185, 186, 187, 188, 189, 190,
            191, 192, 193, 194, 195, 196, 197, 198, 199, 200, 201},
        // b13
        {1, 2, 3, 4, 15, 16, 17, 18, 27, 28, 29, 30, 31, 32, 51, 52,
            53, 54, 63, 64, 65, 66, 67, 68, 87, 88, 89, 90, 91, 92, 96, 97,
            102, 103, 104, 105, 106, 108, 109, 110, 111, 112, 113, 114, 115, 116, 122, 123,
            124, 125, 134, 135, 136, 137, 138, 140, 141, 142, 148, 149, 150, 151, 152, 153,
            154, 155, 156, 162, 163, 168, 169, 170, 171, 182, 183, 184, 190, 191, 192, 193,
            202, 203, 204, 205, 206, 207},
        // b14
        {5, 6, 7, 8, 9, 10, 11, 19, 20, 21, 22, 23, 24, 33, 34, 35,
            36, 37, 38, 39, 40, 41, 42, 43, 44, 55, 56, 57, 58, 59, 60, 69,
            70, 71, 72, 73, 74, 75, 76, 77, 78, 79, 80, 164, 165, 166, 172, 173,
            174, 175, 176, 177, 178, 185, 186, 187, 188, 194, 195, 196, 197, 198, 199, 208,
            209, 210, 211, 212, 213, 214, 215, 216, 217, 218, 219},
        // b15
        {12, 13, 14, 25, 26, 45, 46, 47, 48, 49, 50, 61, 62, 81, 82, 83,
            84, 85, 86, 93, 94, 95, 98, 99, 100, 101, 107, 117, 118, 119, 120, 121,
            126, 127, 128, 129, 130, 131, 132, 133, 139, 143, 144, 145, 146, 147, 157, 158,
            159, 160, 161, 167, 179, 180, 181, 189, 200, 201, 220, 221, 222, 223, 224, 225},
        // b16
        {1, 2, 5, 6, 7, 8, 15, 19, 27, 28, 29, 30, 33, 34, 35, 36,
            37, 38, 39, 40, 51, 52, 53, 55, 56, 57, 58, 59, 63, 64, 65, 66,
            69, 70, 71, 72, 73, 74, 75, 76, 87, 88, 89, 96, 102, 108, 109, 110,
            111, 112, 113, 122, 123, 134, 135, 136, 137, 140, 141, 148, 149, 150, 151, 152,
            153, 162, 164, 165, 166, 168, 169, 172, 173, 174, 175, 182, 185, 190, 191, 192,
            194, 195, 196, 197, 198, 202, 203, 204, 205, 208, 209, 210, 211, 212, 213, 214,
            215},
        // b17
        {3, 4, 9, 10, 11, 16, 17, 18, 20, 21, 22, 23, 24, 31, 32, 41,
            42, 43, 44, 54, 60, 67, 68, 77, 78, 79, 80, 90, 91, 92, 97, 103,
            104, 105, 106, 114, 115, 116, 124, 125, 138, 142, 154, 155, 156, 163, 170, 171,
            176, 177, 178, 183, 184, 186, 187, 188, 193, 199, 206, 207, 216, 217, 218, 219},
        // b18
        {27, 28, 29, 33, 34, 35, 36, 37, 45, 46, 47, 48, 51, 52, 55, 56,
            57, 61, 63, 64, 65, 69, 70, 71, 72, 73, 81, 82, 83, 84, 108, 109,
            110, 111, 117, 118, 119, 122, 126, 127, 128, 129, 130, 134, 135, 136, 140, 143,
            144, 145, 148, 149, 150, 151, 157, 158, 159, 190, 191, 194, 195, 196, 200, 202,
            203, 204, 208, 209, 210, 211, 212, 220, 221, 222, 223},
        // b19
        {1, 2, 5, 6, 7, 8, 12, 13, 14, 15, 19, 25, 26, 30, 38, 39,
            40, 49, 50, 53, 58, 59, 62, 66, 74, 75, 76, 85, 86, 87, 88, 89,
            93, 94, 95, 96, 98, 99, 100, 101, 102, 107, 112, 113, 120, 121, 123, 131,
            132, 133, 137, 139, 141, 146, 147, 152, 153, 160, 161, 162, 164, 165, 166, 167,
            168, 169, 172, 173, 174, 175, 179, 180, 181, 182, 185, 189, 192, 197, 198, 201,
            205, 213, 214, 215, 224, 225},
        // b20
        {16, 17, 20, 21, 22, 23, 27, 28, 31, 33, 34, 35, 36, 41, 42, 45,
            46, 47, 63, 64, 67, 69, 70, 71, 72, 77, 78, 81, 82, 83, 103, 104,
            105, 108, 109, 110, 114, 117, 118, 119, 122, 124, 126, 127, 128, 129, 148, 149,
            150, 154, 157, 158, 159, 183, 186, 187, 188, 190, 194, 195, 196, 199, 200, 202,
            203, 206, 208, 209, 210, 211, 216, 217, 220, 221, 222},
        // b21
        {3, 4, 9, 10, 11, 18, 24, 29, 32, 37, 43, 44, 48, 51, 52, 54,
            55, 56, 57, 60, 61, 65, 68, 73, 79, 80, 84, 90, 91, 92, 97, 106,
            111, 115, 116, 125, 130, 134, 135, 136, 138, 140, 142, 143, 144, 145, 151, 155,
            156, 163, 170, 171, 176, 177, 178, 184, 191, 193, 204, 207, 212, 218, 219, 223},
        // b22
        {1, 2, 5, 6, 7, 12, 15, 16, 17, 19, 20, 21, 22, 25, 27, 28,
            30, 31, 33, 34, 35, 38, 39, 41, 45, 49, 53, 58, 63, 64, 66, 67,
            69, 70, 71, 74, 75, 77, 81, 85, 87, 88, 89, 96, 98, 99, 100, 102,
            103, 104, 105, 108, 109, 110, 112, 113, 114, 122, 123, 124, 126, 127, 128, 131,
            132, 137, 141, 146, 148, 149, 150, 152, 153, 154, 162, 168, 169, 172, 173, 174,
            179, 182, 183, 190, 192, 202, 203, 205, 206, 208, 209, 210, 213, 214, 216, 220,
            224},
        // b23
        {8, 13, 14, 23, 26, 36, 40, 42, 46, 47, 50, 59, 62, 72, 76, 78,
            82, 83, 86, 93, 94, 95, 101, 107, 117, 118, 119, 120, 121, 129, 133, 139,
            147, 157, 158, 159, 160, 161, 164, 165, 166, 167, 175, 180, 181, 185, 186, 187,
            188, 189, 194, 195, 196, 197, 198, 199, 200, 201, 211, 215, 217, 221, 222, 225},
        // b24
        {5, 6, 7, 9, 10, 11, 12, 19, 20, 21, 22, 24, 25, 33, 34, 35,
            37, 38, 39, 41, 43, 44, 45, 48, 49, 55, 56, 57, 58, 60, 61, 69,
            70, 71, 73, 74, 75, 77, 79, 80, 81, 84, 85, 98, 99, 100, 126, 127,
            128, 130, 131, 132, 143, 144, 145, 146, 172, 173, 174, 176, 177, 178, 179, 208,
            209, 210, 212, 213, 214, 216, 218, 219, 220, 223, 224},
        // b25
        {5, 6, 9, 10, 19, 20, 21, 24, 33, 34, 37, 38, 41, 43, 55, 56,
            58, 60, 69, 70, 73, 74, 77, 79, 87, 88, 90, 91, 93, 94, 98, 99,
            102, 103, 104, 106, 107, 108, 109, 111, 112, 114, 115, 117, 118, 120, 126, 127,
            130, 131, 134, 135, 137, 138, 139, 143, 144, 146, 148, 149, 151, 152, 154, 155,
            157, 158, 160, 164, 165, 172, 173, 176, 177, 185, 186, 187, 194, 195, 197, 199,
            208, 209, 212, 213, 216, 218},
        // b26
        {1, 2, 3, 4, 12, 13, 14, 15, 16, 17, 18, 25, 26, 27, 28, 29,
            30, 31, 32, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 61, 62, 63,
            64, 65, 66, 67, 68, 81, 82, 83, 84, 85, 86, 162, 163, 167, 168, 169,
            170, 171, 179, 180, 181, 182, 183, 184, 189, 190, 191, 192, 193, 200, 201, 202,
            203, 204, 205, 206, 207, 220, 221, 222, 223, 224, 225},
        // b27
        {7, 8, 11, 22, 23, 35, 36, 39, 40, 42, 44, 57, 59, 71, 72, 75,
            76, 78, 80, 89, 92, 95, 96, 97, 100, 101, 105, 110, 113, 116, 119, 121,
            122, 123, 124, 125, 128, 129, 132, 133, 136, 140, 141, 142, 145, 147, 150, 153,
            156, 159, 161, 166, 174, 175, 178, 188, 196, 198, 210, 211, 214, 215, 217, 219},
        // b28
        {1, 3, 5, 9, 12, 13, 16, 20, 27, 30, 31, 32, 33, 38, 41, 43,
            45, 46, 49, 50, 51, 53, 54, 55, 58, 60, 61, 62, 63, 66, 67, 68,
            69, 74, 77, 79, 81, 82, 85, 86, 87, 90, 93, 98, 103, 108, 112, 114,
            115, 117, 120, 126, 131, 134, 137, 138, 139, 143, 146, 148, 152, 154, 155, 157,
            160, 162, 163, 164, 167, 168, 170, 172, 176, 179, 180, 183, 186, 190, 192, 193,
            194, 197, 199, 200, 201, 202, 205, 206, 207, 208, 213, 216, 218, 220, 221, 224,
            225},
        // b29
        {2, 4, 6, 10, 14, 15, 17, 18, 19, 21, 24, 25, 26, 28, 29, 34,
            37, 47, 48, 52, 56, 64, 65, 70, 73, 83, 84, 88, 91, 94, 99, 102,
            104, 106, 107, 109, 111, 118, 127, 130, 135, 144, 149, 151, 158, 165, 169, 171,
            173, 177, 181, 182, 184, 185, 187, 189, 191, 195, 203, 204, 209, 212, 222, 223},
        // b30
        {30, 31, 32, 38, 39, 40, 41, 42, 43, 44, 49, 50, 53, 54, 58, 59,
            60, 62, 66, 67, 68, 74, 75, 76, 77, 78, 79, 80, 85, 86, 112, 113,
            114, 115, 116, 120, 121, 123, 124, 125, 131, 132, 133, 137, 138, 139, 141, 142,
            146, 147, 152, 153, 154, 155, 156, 160, 161, 192, 193, 197, 198, 199, 201, 205,
            206, 207, 213, 214, 215, 216, 217, 218, 219, 224, 225},
        // b31
        {1, 3, 5, 7, 8, 9, 11, 12, 13, 16, 20, 22, 23, 27, 33, 35,
            36, 45, 46, 51, 55, 57, 61, 63, 69, 71, 72, 81, 82, 87, 89, 90,
            92, 93, 95, 96, 97, 98, 100, 101, 103, 105, 108, 110, 117, 119, 122, 126,
            128, 129, 134, 136, 140, 143, 145, 148, 150, 157, 159, 162, 163, 164, 166, 167,
            168, 170, 172, 174, 175, 176, 178, 179, 180, 183, 186, 188, 190, 194, 196, 200,
            202, 208, 210, 211, 220, 221},
        // b32
        {15, 18, 19, 24, 25, 26, 29, 30, 32, 37, 38, 39, 40, 43, 44, 48,
            49, 50, 65, 66, 68, 73, 74, 75, 76, 79, 80, 84, 85, 86, 102, 106,
            107, 111, 112, 113, 115, 116, 120, 121, 123, 125, 130, 131, 132, 133, 151, 152,
            153, 155, 156, 160, 161, 182, 184, 185, 189, 191, 192, 193, 197, 198, 201, 204,
            205, 207, 212, 213, 214, 215, 218, 219, 223, 224, 225},
        // b33
        {2, 4, 6, 10, 14, 17, 21, 28, 31, 34, 41, 42, 47, 52, 53, 54,
            56, 58, 59, 60, 62, 64, 67, 70, 77, 78, 83, 88, 91, 94, 99, 104,
            109, 114, 118, 124, 127, 135, 137, 138, 139, 141, 142, 144, 146, 147, 149, 154,
            158, 165, 169, 171, 173, 177, 181, 187, 195, 199, 203, 206, 209, 216, 217, 222},
        // b34
        {1, 3, 5, 8, 9, 13, 15, 16, 18, 19, 20, 23, 24, 26, 27, 29,
            30, 32, 33, 36, 37, 38, 40, 43, 46, 50, 51, 55, 63, 65, 66, 68,
            69, 72, 73, 74, 76, 79, 82, 86, 87, 90, 93, 96, 97, 98, 101, 102,
            103, 106, 107, 108, 111, 112, 115, 117, 120, 122, 123, 125, 126, 129, 130, 131,
            133, 134, 140, 143, 148, 151, 152, 155, 157, 160, 164, 168, 170, 172, 175, 176,
            180, 185, 186, 194, 197, 202, 204, 205, 207, 208, 211, 212, 213, 215, 218, 221,
            225},
        // b35
        {7, 11, 12, 22, 25, 35, 39, 44, 45, 48, 49, 57, 61, 71, 75, 80,
            81, 84, 85, 89, 92, 95, 100, 105, 110, 113, 116, 119, 121, 128, 132, 136,
            145, 150, 153, 156, 159, 161, 162, 163, 166, 167, 174, 178, 179, 182, 183, 184,
            188, 189, 190, 191, 192, 193, 196, 198, 200, 201, 210, 214, 219, 220, 223, 224},
        // b36
        {1, 2, 3, 4, 8, 13, 14, 15, 16, 17, 18, 23, 26, 27, 28, 29,
            30, 31, 32, 36, 40, 42, 46, 47, 50, 51, 52, 53, 54, 59, 62, 63,
            64, 65, 66, 67, 68, 72, 76, 78, 82, 83, 86, 96, 97, 101, 122, 123,
            124, 125, 129, 133, 140, 141, 142, 147, 168, 169, 170, 171, 175, 180, 181, 202,
            203, 204, 205, 206, 207, 211, 215, 217, 221, 222, 225},
    };
    return data;
}

// Heuristically found orthogonal representation of the 15-atom gadget.
inline const std::vector<vec3>& small_heuristic_vectors()
{
    static const std::vector<vec3> data{
        {0.70710678118654757, 0.42426406871192851, -0.56568542494923801},  // 1
        {0.57735026918962573, -0.80829037686547611, 0.11547005383792515},  // 2
        {0.40824829046386302, 0.40824829046386302, 0.81649658092772603},  // 3
        {0.57735026918962573, 0.57735026918962573, -0.57735026918962573},  // 4
        {0.70710678118654757, -0.70710678118654757, 0.0},  // 5
        {0.23570226039551584, -0.75424723326565069, 0.61282587702834124},  // 6
        {0.70710678118654757, 0.56568542494923801, 0.42426406871192851},  // 7
        {-0.66666666666666663, 0.33333333333333331, 0.66666666666666663},  // 8
        {0.70710678118654757, 0.0, 0.70710678118654757},  // 9
        {0.23570226039551584, 0.94280904158206336, -0.23570226039551584},  // 10
        {-0.2672612419124244, 0.96214047088472776, 0.053452248382484878},  // 11
        {0.40824829046386302, 0.16329931618554522, -0.89814623902049862},  // 12
        {0.87287156094396956, 0.21821789023599239, 0.43643578047198478},  // 13
        {-0.40824829046386302, 0.81649658092772603, 0.40824829046386302},  // 14
        {0.2672612419124244, 0.53452248382484879, -0.80178372573727319},  // 15
    };
    return data;
}

// Combo representation, alpha = pi/3, beta = arcsec(-14).
inline const std::vector<vec3>& combo_alpha_pi3_vectors()
{
    static const std::vector<vec3> data{
        {0.54772255750516607, -0.31622776601683794, -0.7745966692414834},  // 1
        {0.81649658092772603, 0.0, 0.57735026918962573},  // 2
        {-0.18257418583505536, -0.94868329805051377, 0.25819888974716115},  // 3
        {0.21542528754074169, -0.29483093260599724, -0.93094933625126275},  // 4
        {-0.95930110609477326, 0.11434474705327705, -0.25819888974716115},  // 5
        {-0.058321184351980429, 0.81441101792795567, 0.57735026918962573},  // 6
        {0.27629699111848266, 0.56891121688614399, -0.7745966692414834},  // 7
        {0.67614003847156334, 0.45771313619158838, 0.57735026918962573},  // 8
        {0.68300411497629054, -0.68325596393942101, -0.25819888974716115},  // 9
        {0.013116615116739651, 0.3649127124960333, -0.93094933625126275},  // 10
        {-0.73029674334022143, -0.63245553203367588, -0.25819888974716115},  // 11
        {0.40824829046386302, -0.70710678118654757, 0.57735026918962573},  // 12
        {0.0, 0.63245553203367588, -0.7745966692414834},  // 13
        {-0.40824829046386302, 0.70710678118654757, 0.57735026918962573},  // 14
        {0.9128709291752769, 0.31622776601683794, 0.25819888974716115},  // 15
        {0.14761843368788052, 0.33397923793084827, -0.93094933625126275},  // 16
        {0.38062509730994287, -0.8879515012832232, -0.25819888974716115},  // 17
        {-0.67614003847156334, -0.45771313619158838, 0.57735026918962573},  // 18
        {-0.63084006188056052, -0.045175395145262559, -0.7745966692414834},  // 19
        {-0.73446122282354376, 0.35669788173636729, 0.57735026918962573},  // 20
        {0.25021496457061759, 0.93312689642848567, -0.25819888974716115},  // 21
        {-0.32258198674382182, -0.17109703434525711, -0.93094933625126275},  // 22
        {0.9128709291752769, -0.31622776601683794, -0.25819888974716115},  // 23
        {0.40824829046386302, 0.70710678118654757, 0.57735026918962573},  // 24
        {-0.54772255750516607, -0.31622776601683794, -0.7745966692414834},  // 25
        {-0.40824829046386302, -0.70710678118654757, 0.57735026918962573},  // 26
        {-0.73029674334022143, 0.63245553203367588, 0.25819888974716115},  // 27
        {-0.36304372122862222, -0.039148305324851009, -0.93094933625126275},  // 28
        {0.57867600878483039, 0.77360675422994607, -0.25819888974716115},  // 29
        {0.73446122282354376, -0.35669788173636729, 0.57735026918962573},  // 30
        {0.35454307076207781, -0.5237358217408814, -0.7745966692414834},  // 31
        {0.058321184351980429, -0.81441101792795567, 0.57735026918962573},  // 32
        {-0.93321907954690819, -0.24987093248906472, -0.25819888974716115},  // 33
        {0.30946537162708215, -0.19381567815077616, -0.93094933625126275},  // 34
        {-0.18257418583505536, 0.94868329805051377, -0.25819888974716115},  // 35
        {-0.81649658092772603, 0.0, 0.57735026918962573},  // 36
    };
    return data;
}

// Combo representation, alpha = pi/2, beta = arcsec(-5).
inline const std::vector<vec3>& combo_alpha_pi2_vectors()
{
    static const std::vector<vec3> data{
        {0.5, -0.5, -0.70710678118654757},  // 1
        {0.81649658092772603, 0.0, 0.57735026918962573},  // 2
        {-0.28867513459481287, -0.8660254037844386, 0.40824829046386302},  // 3
        {0.53973412254985365, 0.20498880527646596, 0.81649658092772603},  // 4
        {0.79079311050489443, -0.45604779323150674, -0.40824829046386302},  // 5
        {-0.16329931618554522, -0.80000000000000004, 0.57735026918962573},  // 6
        {-0.58989794855663558, -0.38989794855663562, -0.70710678118654757},  // 7
        {-0.80000000000000004, 0.16329931618554522, 0.57735026918962573},  // 8
        {-0.10963763171773128, 0.90626316434281962, -0.40824829046386302},  // 9
        {-0.48783151775108496, 0.30879401487400338, 0.81649658092772603},  // 10
        {-0.8660254037844386, -0.28867513459481287, -0.40824829046386302},  // 11
        {0.0, -0.81649658092772603, 0.57735026918962573},  // 12
        {0.18301270189221933, 0.6830127018922193, -0.70710678118654757},  // 13
        {-0.40824829046386302, 0.70710678118654757, 0.57735026918962573},  // 14
        {0.89433756729740643, 0.18301270189221933, 0.40824829046386302},  // 15
        {-0.44739257413576794, 0.36492905877924375, 0.81649658092772603},  // 16
        {-0.00044758097412941661, 0.91287081945070681, -0.40824829046386302},  // 17
        {0.7744699811203235, 0.25857864376269052, 0.57735026918962573},  // 18
        {0.63261050261180241, -0.31591763481205459, -0.70710678118654757},  // 19
        {0.25857864376269052, -0.7744699811203235, 0.57735026918962573},  // 20
        {-0.73002810697608778, -0.54808055644972764, -0.40824829046386302},  // 21
        {-0.023507702541934232, -0.5768714945761606, 0.81649658092772603},  // 22
        {0.6830127018922193, -0.60566243270259357, -0.40824829046386302},  // 23
        {0.70710678118654757, 0.40824829046386302, 0.57735026918962573},  // 24
        {-0.6830127018922193, -0.18301270189221933, -0.70710678118654757},  // 25
        {-0.40824829046386302, -0.70710678118654757, 0.57735026918962573},  // 26
        {-0.60566243270259357, 0.6830127018922193, 0.40824829046386302},  // 27
        {-0.092341548414085733, -0.56991786405570966, 0.81649658092772603},  // 28
        {-0.79034552953076509, -0.45682302621920007, -0.40824829046386302},  // 29
        {-0.61117066493477834, 0.54142135623730947, 0.57735026918962573},  // 30
        {-0.042712554055166843, 0.70581558336869021, -0.70710678118654757},  // 31
        {0.54142135623730947, 0.61117066493477834, 0.57735026918962573},  // 32
        {0.83966573869381911, -0.35818260789309198, -0.40824829046386302},  // 33
        {0.51133922029301915, 0.26807747970215723, 0.81649658092772603},  // 34
        {0.18301270189221933, 0.89433756729740643, -0.40824829046386302},  // 35
        {-0.70710678118654757, 0.40824829046386302, 0.57735026918962573},  // 36
    };
    return data;
}

} // namespace pseudoctx::fixture_data

#endif // PSEUDOCTX_FIXTURE_DATA_HPP
