"""Constants for the G1 hashing map.

Generated by tools/derive_g1_isogeny.py; do not edit by hand.
The map sends y^2 = x^3 + A1 x + B1 to y^2 = x^3 + 4 via a
degree-11 isogeny; coefficient lists are ascending in x.
"""

A1 = 0x1292a20622578912f241764e2c1ca71c7887633aae9fb42b9e551f9cf539a784f0c1b552d25dc63d34c27c2fe7ee4061
B1 = 0x12e2908d11688030018b12e8753eee3b2016c1f0f24f4070a0b9c14fcef35ef55a23215a316ceaa5d1cc48e98e172be0
SSWU_Z = 0xb

X_NUM = [
    0x9f0dbb0a099c5bcb730a6ce65aa3cbd4bd7ee76b4640e4087ea79e68f3c1c1308b5038562a25ff03735cb7c64eb7f37,
    0x17294ed3e943ab2f0588bab22147a81c7c17e75b2f6a8417f565e33c70d1e86b4838f2a6f318c356e834eef1b3cb83bb,
    0x850d322ed21557057734b8e40aefb186a77271d38c7150dce509846ea61829a4289b41eef4b5c6883651738be57fec3,
    0x2222e94f60612edf720a1dae1413c18923cc04b3fb322ac71e976e27a6333a1d125d59c77fd642d184b6950e135226c,
    0xe99726a3199f4436642b4b3e4118e5499db995a1257fb3f086eeb65982fac18985a286f301e77c451154ce9ac8895d9,
    0x17c90a0a3be842214c7f6d2c0246f013d756152a3d5edc4fdbce6e22197ff66a804235dfe460c8f8d364ddbf341cffb,
    0xaf56dc65a67e05ba39edfc83537c5402aff14bf689317e40b001a371cac72d0867ec63780ec215a785c27bf0a7c6ce4,
    0x17b81e7701abdbe2e8743884d1117e53356de5ab275b4db1a682c62ef0f2753339b7c8f8c8f475af9ccb5618e3f0c88e,
    0x4c20500e52cba59486bef4c5b198bf7e903fec25acc19f499f28df8e5b685475b895f79b572b74aa3eda210ca57b2e6,
    0x18dd65d3ec013c249acc170926956bc2def86c039f0d928acaa7e15bc308e2cecfbf4ec00ddca3a2325c0e17bbd3db2a,
    0x10321da079ce07e272d8ec09d2565b0dfa7dccdde6787f96d50af36003b14866f69b771f8c285decca67df3f1605fb7b,
    0x13578a26cfcb089d14af39e50dd199899caa00af1dad2852f39c4752232eef551eff12b5236287677bea1d9ead7c91fc,
]

X_DEN = [
    0x19a8f720a0b4a4505520523b5bbf7f4891d5228d32a529ddc58003abc5ddb3155d8ab0658126a80c8550bce6e5995dd5,
    0x12561a5deb559c4348b4711298e536367041e8ca0cf0800c0126c2588c48bf5713daa8846cb026e9e5c8276ec82b3bff,
    0x3f7829d8e77f92fb79c958e00f9b9721a1eea152ef3d0d8b21a0f1e5d8ac987ced32b2a478beb8db629293c293946e9,
    0xfd940ad86b5b2cc67de9c769cb1a62b17aba358d6136423dd109bc506db485847946ee9c93b584211324fec4ad9a773,
    0x13a8e162022914a80a6f1d5f43e7a07dffdfc759a12062bb8d6b44e833b306da9bd29ba81f35781d539d395b3532a21e,
    0x121c11de75310b53edff3357b45dc615b69fc89940aa4822b26fe1809433ad163c7aedd5bf440b7799088fc3e0b3fee1,
    0x183b152de0dc87d4018253d976de087b7975266c01791ec6bd7df51053d13780cabd93be9ee7ab1e33a5154dbfd9340d,
    0x14a7ac2a9d64a8b230b3f5b074cf01996e7f63c21bca68a81996e1cdf9822c580fa5b9489d11e2d311f7d99bbdcc5a5e,
    0x471e8a5298339ad60ce630b154bd3b46209561d10cd06d7962374d281d2c03a0835257b50ee3e6d2ca0b01c2139dd59,
    0x8ce9685a8b61908fab17baa96a17b926c40772eb7f10c6c33b716a3792165872c5a2995b8978ce26652ba2877d4db4f,
    0x1,
]

Y_NUM = [
    0x10f37a221ddd97ba257e88acf9cacfdd52ca37f6aadca96d3bde2334614bb250519f851016185c3cfb66ba8e68f7ef78,
    0x102f8efc54d308fbf81bd3ab0c8f6d78babeb80415973f423653f65fae69706a817e47acae84c326cbda8ff7d624f720,
    0x2855c346446aff70696ba6f35d1d32ac40588c7b552dda08a95cadd854a88bade1e58b7c6e93daa043093e4a193e59e,
    0x1808ae7350e7ca78d283329b6ad7457f904ca3cbe49999a35d4c2eb4f38bd92a406ba544128de21313c9a3884f19b5e0,
    0x22c16ce684db8709de47d76662afd5fdc445dde131317dcf47681525fd289d154978e5be2fa011e21b3747828a2ed2f,
    0x143a2e45bfbff3e3c8b26e8343dbd7e85006d1a85758c6f247c792176cdf5ef1a98904ac0cf31ad65470d089ea3e0c38,
    0x1556064e69d3cadd98522fe61bd2419a7d1b92bac7a38df414ff9164a94da6ecd703853c6b44bea0f09d077aa015d3b9,
    0x3dfc2828cd3c8f4abe22497112b8ebd091909b92abaaa18260e523bd83030650ade3aeaf03aa87d63e6dff9d7810818,
    0x17d9f1ee4e14daf1ed910eca76fd528741f90539cf001d9d96a2d02a62c45d3b2a912c879b4dc9f4b2363228c8b4b221,
    0xbe5577027f928e528e0e9ce95aa62b3a04d3edd622a1bc16098742224cc21e8836c8fa8d40545908e4f5514358c8e7b,
    0xc681dda7b953fb157d85be79070a57852120c963ceec7899b7b4ef4a08482e0cdbdf446d52db422ae1030ecea14f7e5,
    0x4364d45b03e774844b6a3ebf70fb5be1c4543d4ac104d4a2f6f000c1ccceb9313d83a0cac8968c3813525b4ce7774f,
    0xee8e53e2964530079c69e563e566d92e9cf9a5abf5e6230a709c1b8eefc92e517e3ae3d1fc1ee0dacb2fb0ff4688bb3,
    0xd3897e0a00c75dd96722ebf6a0594e37b8c779c85422eba99c763ef0b2d7e852eb18bb3b8209e4ecd51d5d2fa4d19ba,
    0x70384ab4d5e72177d050ec522bd6af0403b1365d42097feaedac7ddf8ecec1ad15283b3cb3127f170267d18f5493d24,
    0x41a539ba070e2cbfc769c7b006c7e21995f2df56eeeb8860f82fda66101f4716846fd7fb293e388b54aa9419636f4a7,
]

Y_DEN = [
    0x16112c4c3a9c98b252181140fad0eae9601a6de578980be6eec3232b5be72e7a07f3688ef60c206d01479253b03663c1,
    0x19b3c63132cbd83d9232b881b8cb4237ddb414481dfa025cce221ba0af809719b3d5fe1e218a3c0c248326333ba795ce,
    0x143e67964f6b6cc15e97b78b813ef8eef7981ecdd63ce0538aac1b635f7fb456d4911d1f6b7565c1d5db1421d201f612,
    0x16b7d288798e5395f20d23bf89edb4d1d115c5dbddbcd30e123da489e726af41727364f2c28297ada8d26d98445f5416,
    0x18d0478a9243ad109ffbfd95900ea0b1bff8e4214542990379771d1ab0f12df7f097043b4f85b2b8e65e0a1b6bdf288d,
    0x18f02fd29d822df76c7bae804f6909e7ab175cac4fc6ccdd8e89b1399612a41131d50eccecae30ad3634c8a0a6c77580,
    0x166007c08a99db2fc3ba8734ace9824b5eecfdfa8d0cf8ef5dd365bc400a0051d5fa9c01a58b1fb93d1a1399126a775c,
    0x7ba7c44396ebd0631a4c8296ec1faa5f28e6aefe4359d2305c236bcb6e53529f34575070bba11fc78b0cc1953c68f7c,
    0xf02096fe49f9bcf15aef313350b18ee96c422350dce89495f83df8f3cd32dee371f3894edb5ef897570cfad483e7482,
    0x167a55cda70a6e1cea820597d94a84903216f763e13d87bb5308592e7ea7d4fbc7385ea3d529b35e346ef48bb8913f55,
    0x1954fd71ca1198e63b3ca9941fe8bc11d1d48168afdd673a2fc39b2a79c487a4e0b42ffa19e5c24040996d49cc88e71a,
    0xf79d8bbec0273e6afd6ae2ad677fb748a0d1db2434afa125384b05d9a630ee054fa1c9ec2fcbad5138eb58d0c13c420,
    0xad6b9514c767fe3c3613144b45f1496543346d98adf02267d5ceef9a00d9b8693000763e3b90ac11e99b138573345cc,
    0x61a3ec2b69f2771f44dd4508444c688be927226b3a3c04734447f3addc0a8f381c6fc9bdb5bacd0ddd42db7cea47ee7,
    0x3558d360513240527c65a4c04c62eff0250d039a27094299fa38a4ba599d38b3313e613c395353bc7c973cb3bf73a1,
    0x1,
]

