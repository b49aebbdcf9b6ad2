// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The biosig Authors

// Generated by tools/gen_wavelet_tables.py. Do not edit.

#pragma once

#include <array>
#include <span>
#include <string_view>

namespace biosig::detail {

struct LowpassTable {
  std::string_view name;
  std::span<const double> dec_lo;
};

inline constexpr std::array<double, 2> k_haar = {
    7.071067811865475244e-1,
    7.071067811865475244e-1,
};

inline constexpr std::array<double, 4> k_db2 = {
    -1.2940952255126038117e-1,
    2.2414386804201338103e-1,
    8.3651630373780790558e-1,
    4.8296291314453414337e-1,
};

inline constexpr std::array<double, 6> k_db3 = {
    3.5226291885709536603e-2,
    -8.5441273882026661693e-2,
    -1.350110200102545887e-1,
    4.598775021184915701e-1,
    8.0689150931109257649e-1,
    3.32670552950082616e-1,
};

inline constexpr std::array<double, 8> k_db4 = {
    -1.0597401785069032105e-2,
    3.2883011666885199735e-2,
    3.0841381835560763627e-2,
    -1.8703481171909308408e-1,
    -2.7983769416859854211e-2,
    6.3088076792985890788e-1,
    7.1484657055291564709e-1,
    2.3037781330889650086e-1,
};

inline constexpr std::array<double, 10> k_db5 = {
    3.335725285473771278e-3,
    -1.2580751999081999469e-2,
    -6.2414902127982742742e-3,
    7.7571493840045713523e-2,
    -3.2244869584638374648e-2,
    -2.4229488706638203186e-1,
    1.3842814590132073151e-1,
    7.2430852843777292773e-1,
    6.0382926979718967054e-1,
    1.6010239797419291448e-1,
};

inline constexpr std::array<double, 12> k_db6 = {
    -1.0773010853084795649e-3,
    4.7772575109455106396e-3,
    5.5384220116149613925e-4,
    -3.1582039317486029565e-2,
    2.7522865530305728626e-2,
    9.7501605587323049102e-2,
    -1.2976686756726193556e-1,
    -2.2626469396543982008e-1,
    3.1525035170919762909e-1,
    7.5113390802109535068e-1,
    4.9462389039845308568e-1,
    1.1154074335010946362e-1,
};

inline constexpr std::array<double, 14> k_db7 = {
    3.5371379997452024845e-4,
    -1.8016407040474909153e-3,
    4.2957797292136652113e-4,
    1.2550998556099840613e-2,
    -1.6574541630666880654e-2,
    -3.802993693501441358e-2,
    8.0612609151083071913e-2,
    7.1309219266830264751e-2,
    -2.2403618499387498264e-1,
    -1.4390600392856497541e-1,
    4.6978228740519312247e-1,
    7.2913209084623511992e-1,
    3.9653931948191730654e-1,
    7.785205408500917902e-2,
};

inline constexpr std::array<double, 16> k_db8 = {
    -1.1747678412476953373e-4,
    6.7544940645056936637e-4,
    -3.917403733769470463e-4,
    -4.8703529934515743104e-3,
    8.7460940474057767164e-3,
    1.3981027917398281649e-2,
    -4.4088253930794751507e-2,
    -1.736930100180754617e-2,
    1.2874742662047845886e-1,
    4.7248457391328277036e-4,
    -2.8401554296154692652e-1,
    -1.5829105256349305667e-2,
    5.8535468365420671277e-1,
    6.7563073629728980681e-1,
    3.1287159091429997066e-1,
    5.4415842243104009955e-2,
};

inline constexpr std::array<double, 18> k_db9 = {
    3.9347320316271599481e-5,
    -2.5196318894271013697e-4,
    2.3038576352319596721e-4,
    1.8476468830562264766e-3,
    -4.2815036824634298345e-3,
    -4.7232047577513972779e-3,
    2.2361662123679097205e-2,
    2.5094711483145195759e-4,
    -6.7632829061329973676e-2,
    3.0725681479333379212e-2,
    1.4854074933810638014e-1,
    -9.6840783222976460514e-2,
    -2.9327378327917490881e-1,
    1.3319738582500757619e-1,
    6.5728807805130053808e-1,
    6.048231236901111119e-1,
    2.4383467461259035373e-1,
    3.8077947363878346589e-2,
};

inline constexpr std::array<double, 20> k_db10 = {
    -1.3264202894521244812e-5,
    9.3588670320069591334e-5,
    -1.1646685512928545095e-4,
    -6.8585669495971162656e-4,
    1.9924052951850561172e-3,
    1.3953517470529011658e-3,
    -1.0733175483330575044e-2,
    3.6065535669561696554e-3,
    3.321267405934100174e-2,
    -2.9457536821875812858e-2,
    -7.1394147166397087145e-2,
    9.305736460357235116e-2,
    1.2736934033579326008e-1,
    -1.959462743773770435e-1,
    -2.4984642432731537942e-1,
    2.8117234366057746075e-1,
    6.8845903945360356574e-1,
    5.2720118893172558648e-1,
    1.8817680007769148902e-1,
    2.6670057900555553587e-2,
};

inline constexpr std::array<double, 4> k_sym2 = {
    -1.2940952255126038117e-1,
    2.2414386804201338103e-1,
    8.3651630373780790558e-1,
    4.8296291314453414337e-1,
};

inline constexpr std::array<double, 6> k_sym3 = {
    3.5226291885709536603e-2,
    -8.5441273882026661693e-2,
    -1.350110200102545887e-1,
    4.598775021184915701e-1,
    8.0689150931109257649e-1,
    3.32670552950082616e-1,
};

inline constexpr std::array<double, 8> k_sym4 = {
    -7.5765714789502213228e-2,
    -2.9635527646002491764e-2,
    4.9761866763277498998e-1,
    8.0373875180513208088e-1,
    2.978577956053060514e-1,
    -9.9219543576633532585e-2,
    -1.2603967262031303754e-2,
    3.2223100604051467872e-2,
};

inline constexpr std::array<double, 10> k_sym5 = {
    2.7333068344998768818e-2,
    2.951949092570626125e-2,
    -3.9134249302313843624e-2,
    1.993975339768555969e-1,
    7.2340769040404079207e-1,
    6.3397896345679206372e-1,
    1.6602105764510848133e-2,
    -1.7532808990805622424e-1,
    -2.1101834024689041001e-2,
    1.9538882735249826776e-2,
};

inline constexpr std::array<double, 12> k_sym6 = {
    1.5404109327044824299e-2,
    3.4907120842221625153e-3,
    -1.179901111485200254e-1,
    -4.8311742585698054971e-2,
    4.9105594192797373304e-1,
    7.8764114102865099607e-1,
    3.3792942172816583271e-1,
    -7.2637522786376583464e-2,
    -2.1060292512370847992e-2,
    4.4724901770781384663e-2,
    1.767711864254007741e-3,
    -7.8007083250323804142e-3,
};

inline constexpr std::array<double, 14> k_sym7 = {
    2.6818145682601470291e-3,
    -1.0473848886797380865e-3,
    -1.2636303403240566583e-2,
    3.0515513165877885745e-2,
    6.7892693501220564905e-2,
    -4.9552834937042832301e-2,
    1.7441255086835706851e-2,
    5.3610191709056923066e-1,
    7.6776431700488293117e-1,
    2.886296317506478747e-1,
    -1.4004724044293365414e-1,
    -1.0780823770328971255e-1,
    4.0102448715223951678e-3,
    1.0268176708464816231e-2,
};

inline constexpr std::array<double, 16> k_sym8 = {
    -3.3824159510050025955e-3,
    -5.4213233180001068935e-4,
    3.1695087811525991431e-2,
    7.6074873249766081919e-3,
    -1.4329423835127266284e-1,
    -6.1273359067811077843e-2,
    4.8135965125905339159e-1,
    7.7718575169962802862e-1,
    3.6444189483617893676e-1,
    -5.1945838107881800736e-2,
    -2.7219029917103486322e-2,
    4.9137179673730286787e-2,
    3.8087520138944894631e-3,
    -1.4952258337062199118e-2,
    -3.0292051472413308126e-4,
    1.8899503327676891843e-3,
};

inline constexpr std::array<LowpassTable, 17> k_lowpass_tables = {{
    {"haar", k_haar},
    {"db2", k_db2},
    {"db3", k_db3},
    {"db4", k_db4},
    {"db5", k_db5},
    {"db6", k_db6},
    {"db7", k_db7},
    {"db8", k_db8},
    {"db9", k_db9},
    {"db10", k_db10},
    {"sym2", k_sym2},
    {"sym3", k_sym3},
    {"sym4", k_sym4},
    {"sym5", k_sym5},
    {"sym6", k_sym6},
    {"sym7", k_sym7},
    {"sym8", k_sym8},
}};

}  // namespace biosig::detail
