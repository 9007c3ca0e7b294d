/// (numerator, denominator) of B_2, B_4, …, B_60.
pub(super) const BERNOULLI_EVEN: [(&str, &str); 30] = [
    ("1", "6"),
    ("-1", "30"),
    ("1", "42"),
    ("-1", "30"),
    ("5", "66"),
    ("-691", "2730"),
    ("7", "6"),
    ("-3617", "510"),
    ("43867", "798"),
    ("-174611", "330"),
    ("854513", "138"),
    ("-236364091", "2730"),
    ("8553103", "6"),
    ("-23749461029", "870"),
    ("8615841276005", "14322"),
    ("-7709321041217", "510"),
    ("2577687858367", "6"),
    ("-26315271553053477373", "1919190"),
    ("2929993913841559", "6"),
    ("-261082718496449122051", "13530"),
    ("1520097643918070802691", "1806"),
    ("-27833269579301024235023", "690"),
    ("596451111593912163277961", "282"),
    ("-5609403368997817686249127547", "46410"),
    ("495057205241079648212477525", "66"),
    ("-801165718135489957347924991853", "1590"),
    ("29149963634884862421418123812691", "798"),
    ("-2479392929313226753685415739663229", "870"),
    ("84483613348880041862046775994036021", "354"),
    ("-1215233140483755572040304994079820246041491", "56786730"),
];
