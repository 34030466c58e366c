"""Hand-checked source fixtures with frozen expected metric values.

Every number in this table was derived by hand from the source text next to
it: line counts by reading the lines, statement counts by applying the
counting rules one construct at a time, token counts by tallying the token
stream by hand.  Tests must treat these values as the oracle and never
regenerate them from the code under test.

Integer columns are stored directly.  Float columns that follow from frozen
integers (volume, difficulty, effort, mi, kloc) are recomputed by the checker
from the stored counts.  Cohesion values are stored as exact floats, with
None standing for an undefined (NaN) value.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Case:
    file: str
    source: str
    classes: dict[str, dict] = field(default_factory=dict)


def expect(**overrides) -> dict:
    base = {
        "loc": 0,
        "blanks": 0,
        "comments": 0,
        "ncss": 0,
        "cyclomatic": 0,
        "cognitive": 0,
        "halstead": (0, 0, 0, 0),
        "attributes": 0,
        "static_attributes": 0,
        "constructors": 0,
        "methods": 0,
        "static_methods": 0,
        "lcom5": None,
        "nhd": None,
        "tcc": None,
        "lcom1": 0,
        "wmc": 0,
        "rfc": 0,
        "cbo": 0,
        "dit": 0,
        "noc": 0,
        "interfaces_implemented": 0,
        "extends_flag": 0,
        "is_abstract": 0,
        "is_final": 0,
        "public_methods": 0,
        "private_methods": 0,
        "protected_methods": 0,
        "default_visibility_methods": 0,
        "annotations_on_class": 0,
        "imports_count": 0,
        "lambda_count": 0,
        "try_blocks": 0,
        "catch_blocks": 0,
        "returns_count": 0,
    }
    unknown = set(overrides) - set(base)
    assert not unknown, f"unknown expectation keys: {unknown}"
    base.update(overrides)
    return base


CASES = [
    Case(
        file="Empty.java",
        source="class Empty {}\n",
        classes={
            "Empty": expect(loc=1, ncss=1, halstead=(2, 1, 2, 1)),
        },
    ),
    Case(
        file="Greeter.java",
        source=(
            "class Greeter {\n"
            "    private String name;\n"
            "\n"
            "    String greet() {\n"
            '        return "hi " + name;\n'
            "    }\n"
            "}\n"
        ),
        classes={
            "Greeter": expect(
                loc=7, blanks=1, ncss=4, cyclomatic=1, halstead=(8, 5, 11, 7),
                attributes=1, methods=1, wmc=1, rfc=1,
                default_visibility_methods=1, returns_count=1,
            ),
        },
    ),
    Case(
        file="Counter.java",
        source=(
            "class Counter {\n"
            "    static int total;\n"
            "    int a, b;\n"
            "\n"
            "    Counter(int seed) {\n"
            "        a = seed;\n"
            "    }\n"
            "\n"
            "    void bump() {\n"
            "        a++;\n"
            "    }\n"
            "\n"
            "    static void reset() {\n"
            "        total = 0;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Counter": expect(
                loc=16, blanks=3, ncss=9, cyclomatic=3, halstead=(11, 8, 30, 13),
                attributes=2, static_attributes=1, constructors=1, methods=2,
                static_methods=1, wmc=3, rfc=3, default_visibility_methods=2,
            ),
        },
    ),
    Case(
        file="Branchy.java",
        source=(
            "class Branchy {\n"
            "    int pick(int a, int b) {\n"
            "        if (a > 0 && b > 0) return a;\n"
            "        return b;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Branchy": expect(
                loc=6, ncss=5, cyclomatic=3, cognitive=1, halstead=(11, 5, 20, 10),
                methods=1, wmc=3, rfc=1, default_visibility_methods=1,
                returns_count=2,
            ),
        },
    ),
    Case(
        file="Cascade.java",
        source=(
            "class Cascade {\n"
            "    void check(boolean deep, boolean wide) {\n"
            "        if (deep) {\n"
            "            if (wide) {\n"
            "                go();\n"
            "            }\n"
            "        }\n"
            "    }\n"
            "\n"
            "    void go() {\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Cascade": expect(
                loc=12, blanks=1, ncss=6, cyclomatic=4, cognitive=3,
                halstead=(9, 5, 28, 8), methods=2, nhd=0.0, lcom1=1,
                wmc=4, rfc=2, default_visibility_methods=2,
            ),
        },
    ),
    Case(
        file="Chooser.java",
        source=(
            "class Chooser {\n"
            "    int choose(boolean flag, int a, int b) {\n"
            "        if (flag || a > b || b == 0) {\n"
            "            return a > 0 ? a : b;\n"
            "        } else {\n"
            "            return b;\n"
            "        }\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Chooser": expect(
                loc=9, ncss=6, cyclomatic=5, cognitive=3, halstead=(16, 6, 31, 15),
                methods=1, wmc=5, rfc=1, default_visibility_methods=1,
                returns_count=2,
            ),
        },
    ),
    Case(
        file="Looper.java",
        source=(
            "class Looper {\n"
            "    int total;\n"
            "\n"
            "    int spin(int[] xs) {\n"
            "        for (int x : xs) {\n"
            "            total += x;\n"
            "        }\n"
            "        int i = 0;\n"
            "        while (i < 3) {\n"
            "            i++;\n"
            "        }\n"
            "        do {\n"
            "            i--;\n"
            "        } while (i > 0);\n"
            "        return total;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Looper": expect(
                loc=17, blanks=1, ncss=11, cyclomatic=4, cognitive=3,
                halstead=(19, 8, 44, 17), attributes=1, methods=1, wmc=4, rfc=1,
                default_visibility_methods=1, returns_count=1,
            ),
        },
    ),
    Case(
        file="Switcher.java",
        source=(
            "class Switcher {\n"
            "    int grade(int k) {\n"
            "        switch (k) {\n"
            "            case 1:\n"
            "            case 2:\n"
            "                return 10;\n"
            "            default:\n"
            "                return 0;\n"
            "        }\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Switcher": expect(
                loc=11, ncss=7, cyclomatic=3, cognitive=1, halstead=(11, 7, 23, 8),
                methods=1, wmc=3, rfc=1, default_visibility_methods=1,
                returns_count=2,
            ),
        },
    ),
    Case(
        file="Catcher.java",
        source=(
            "class Catcher {\n"
            "    int parse(String s) {\n"
            "        try {\n"
            "            return Integer.parseInt(s);\n"
            "        } catch (NumberFormatException e) {\n"
            "            return -1;\n"
            "        } finally {\n"
            "            log();\n"
            "        }\n"
            "    }\n"
            "\n"
            "    void log() {\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Catcher": expect(
                loc=14, blanks=1, ncss=9, cyclomatic=3, cognitive=1,
                halstead=(13, 10, 34, 12), methods=2, nhd=0.0, lcom1=1,
                wmc=3, rfc=3, default_visibility_methods=2,
                try_blocks=1, catch_blocks=1, returns_count=2,
            ),
        },
    ),
    Case(
        file="PairShare.java",
        source=(
            "public class PairShare {\n"
            "    private int value;\n"
            "\n"
            "    public int read() {\n"
            "        return value;\n"
            "    }\n"
            "\n"
            "    public void write(int v) {\n"
            "        value = v;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "PairShare": expect(
                loc=11, blanks=2, ncss=6, cyclomatic=2, halstead=(11, 5, 23, 8),
                attributes=1, methods=2, lcom5=0.0, nhd=0.0, tcc=1.0,
                wmc=2, rfc=2, public_methods=2, returns_count=1,
            ),
        },
    ),
    Case(
        file="TrioCohesion.java",
        source=(
            "public class TrioCohesion {\n"
            "    int shared;\n"
            "    int lonely;\n"
            "\n"
            "    public void first() {\n"
            "        shared = 1;\n"
            "    }\n"
            "\n"
            "    public void second() {\n"
            "        shared = 2;\n"
            "    }\n"
            "\n"
            "    public int third() {\n"
            "        return lonely;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "TrioCohesion": expect(
                loc=16, blanks=3, ncss=9, cyclomatic=3, halstead=(10, 8, 31, 11),
                attributes=2, methods=3, lcom5=0.75, tcc=1.0 / 3.0, lcom1=1,
                wmc=3, rfc=3, public_methods=3, returns_count=1,
            ),
        },
    ),
    Case(
        file="Isolated.java",
        source=(
            "class Isolated {\n"
            "    int p;\n"
            "    int q;\n"
            "\n"
            "    void one(int x) {\n"
            "    }\n"
            "\n"
            "    void two(String s) {\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Isolated": expect(
                loc=10, blanks=2, ncss=5, cyclomatic=2, halstead=(7, 8, 17, 8),
                attributes=2, methods=2, lcom5=2.0, nhd=0.0, lcom1=1,
                wmc=2, rfc=2, default_visibility_methods=2,
            ),
        },
    ),
    Case(
        file="Chain.java",
        source=(
            "class Base {\n"
            "}\n"
            "\n"
            "class Mid extends Base {\n"
            "}\n"
            "\n"
            "class Leaf extends Mid {\n"
            "    Base buddy;\n"
            "}\n"
        ),
        classes={
            "Base": expect(loc=9, blanks=2, ncss=4, halstead=(2, 1, 2, 1), cbo=2, noc=1),
            "Mid": expect(
                loc=9, blanks=2, ncss=4, halstead=(3, 2, 3, 2), cbo=2, dit=1,
                noc=1, extends_flag=1,
            ),
            "Leaf": expect(
                loc=9, blanks=2, ncss=4, halstead=(4, 4, 4, 4), attributes=1,
                cbo=2, dit=2, extends_flag=1,
            ),
        },
    ),
    Case(
        file="Outer.java",
        source=(
            "class Outer {\n"
            "    int base;\n"
            "\n"
            "    int single() {\n"
            "        return base;\n"
            "    }\n"
            "\n"
            "    class Inner {\n"
            "        int extra;\n"
            "\n"
            "        int twice() {\n"
            "            if (extra > 0) {\n"
            "                return extra + base;\n"
            "            }\n"
            "            return extra;\n"
            "        }\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Outer": expect(
                loc=18, blanks=3, ncss=10, cyclomatic=3, cognitive=1,
                halstead=(10, 7, 31, 12), attributes=1, methods=1,
                wmc=1, rfc=1, default_visibility_methods=1, returns_count=3,
            ),
        },
    ),
    Case(
        file="StaticsOnly.java",
        source=(
            "class StaticsOnly {\n"
            "    static int hits;\n"
            "    int live;\n"
            "\n"
            "    static void tick() {\n"
            "        hits++;\n"
            "    }\n"
            "\n"
            "    int look() {\n"
            "        return live;\n"
            "    }\n"
            "\n"
            "    int peek() {\n"
            "        return live;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "StaticsOnly": expect(
                loc=16, blanks=3, ncss=9, cyclomatic=3, halstead=(10, 6, 29, 9),
                attributes=1, static_attributes=1, methods=3, static_methods=1,
                lcom5=0.0, wmc=3, rfc=3, default_visibility_methods=3,
                returns_count=2,
            ),
        },
    ),
    Case(
        file="IFace.java",
        source=(
            "interface IFace {\n"
            "    int SIZE = 4;\n"
            "\n"
            "    void start();\n"
            "\n"
            "    void stop(int mode);\n"
            "}\n"
        ),
        classes={
            "IFace": expect(
                loc=7, blanks=2, ncss=4, cyclomatic=2, halstead=(8, 6, 14, 6),
                static_attributes=1, methods=2, nhd=0.0, lcom1=1, wmc=2, rfc=2,
                public_methods=2,
            ),
        },
    ),
    Case(
        file="Hue.java",
        source=(
            "enum Hue {\n"
            "    RED, GREEN;\n"
            "\n"
            "    static Hue pick() {\n"
            "        return RED;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Hue": expect(
                loc=7, blanks=1, ncss=3, cyclomatic=1, halstead=(8, 4, 11, 6),
                methods=1, static_methods=1, wmc=1, rfc=1,
                default_visibility_methods=1, returns_count=1,
            ),
        },
    ),
    Case(
        file="Tagger.java",
        source=(
            "@Deprecated\n"
            "public @interface Tagger {\n"
            '    String value() default "";\n'
            "\n"
            "    int level() default 0;\n"
            "}\n"
        ),
        classes={
            "Tagger": expect(
                loc=6, blanks=1, ncss=3, cyclomatic=2, halstead=(8, 7, 12, 7),
                methods=2, lcom1=1, wmc=2, rfc=2, public_methods=2,
                annotations_on_class=1,
            ),
        },
    ),
    Case(
        file="Caller.java",
        source=(
            "class Caller {\n"
            "    void run() {\n"
            "        foo();\n"
            "        bar();\n"
            "        run();\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Caller": expect(
                loc=7, ncss=5, cyclomatic=1, halstead=(6, 4, 16, 5), methods=1,
                wmc=1, rfc=3, default_visibility_methods=1,
            ),
        },
    ),
    Case(
        file="Deep.java",
        source=(
            "class Deep {\n"
            "    int score(int[][] grid) {\n"
            "        int total = 0;\n"
            "        for (int[] row : grid) {\n"
            "            for (int cell : row) {\n"
            "                if (cell > 9) {\n"
            "                    total += cell * 2;\n"
            "                } else if (cell > 0) {\n"
            "                    total += cell;\n"
            "                } else {\n"
            "                    total -= 1;\n"
            "                }\n"
            "            }\n"
            "        }\n"
            "        return total;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Deep": expect(
                loc=17, ncss=13, cyclomatic=5, cognitive=8,
                halstead=(18, 10, 56, 21), methods=1, wmc=5, rfc=1,
                default_visibility_methods=1, returns_count=1,
            ),
        },
    ),
    Case(
        file="Lambdas.java",
        source=(
            "import java.util.function.IntSupplier;\n"
            "\n"
            "class Lambdas {\n"
            "    IntSupplier make(int seed) {\n"
            "        return () -> {\n"
            "            if (seed > 0) {\n"
            "                return seed;\n"
            "            }\n"
            "            return 0;\n"
            "        };\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Lambdas": expect(
                loc=12, blanks=1, ncss=7, cyclomatic=2, cognitive=2,
                halstead=(10, 5, 24, 8), methods=1, wmc=2, rfc=1,
                default_visibility_methods=1, imports_count=1, lambda_count=1,
                returns_count=3,
            ),
        },
    ),
    Case(
        file="AnonRunner.java",
        source=(
            "class AnonRunner {\n"
            "    Runnable build(int n) {\n"
            "        return new Runnable() {\n"
            "            public void run() {\n"
            "                if (n > 0) {\n"
            "                    go();\n"
            "                }\n"
            "            }\n"
            "        };\n"
            "    }\n"
            "\n"
            "    void go() {\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "AnonRunner": expect(
                loc=14, blanks=1, ncss=7, cyclomatic=4, cognitive=2,
                halstead=(12, 7, 34, 10), methods=2, nhd=0.0, lcom1=1,
                wmc=2, rfc=2, default_visibility_methods=2, returns_count=1,
            ),
        },
    ),
    Case(
        file="Shadow.java",
        source=(
            "class Shadow {\n"
            "    int x;\n"
            "    int y;\n"
            "\n"
            "    void real() {\n"
            "        x = 1;\n"
            "    }\n"
            "\n"
            "    void hidden(int x) {\n"
            "        x = 2;\n"
            "        this.y = y;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Shadow": expect(
                loc=13, blanks=2, ncss=8, cyclomatic=2, halstead=(10, 7, 25, 12),
                attributes=2, methods=2, lcom5=1.0, nhd=0.0, lcom1=1,
                wmc=2, rfc=2, default_visibility_methods=2,
            ),
        },
    ),
    Case(
        file="Creator.java",
        source=(
            "import java.util.ArrayList;\n"
            "import java.util.List;\n"
            "\n"
            "class Creator {\n"
            "    List<String> fill() {\n"
            "        List<String> out = new ArrayList<String>();\n"
            '        out.add("x");\n'
            "        return out;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Creator": expect(
                loc=10, blanks=1, ncss=7, cyclomatic=1, halstead=(11, 8, 23, 13),
                methods=1, wmc=1, rfc=2, default_visibility_methods=1,
                imports_count=2, returns_count=1,
            ),
        },
    ),
    Case(
        file="Pair.java",
        source=(
            "class Alpha {\n"
            "    Beta partner;\n"
            "}\n"
            "\n"
            "class Beta {\n"
            "    int weight;\n"
            "}\n"
        ),
        classes={
            "Alpha": expect(loc=7, blanks=1, ncss=4, halstead=(3, 3, 3, 3), attributes=1, cbo=1),
            "Beta": expect(loc=7, blanks=1, ncss=4, halstead=(4, 2, 4, 2), attributes=1, cbo=1),
        },
    ),
    Case(
        file="Wired.java",
        source=(
            "class Wired extends Framework {\n"
            "}\n"
        ),
        classes={
            "Wired": expect(loc=2, ncss=1, halstead=(3, 2, 3, 2), dit=1, extends_flag=1),
        },
    ),
    Case(
        file="ObjectChild.java",
        source=(
            "class ObjectChild extends Object {\n"
            "    ObjectChild() {\n"
            "        super();\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "ObjectChild": expect(
                loc=5, ncss=3, cyclomatic=1, halstead=(7, 2, 11, 3),
                constructors=1, wmc=1, rfc=1, extends_flag=1,
            ),
        },
    ),
    Case(
        file="Zoo.java",
        source=(
            "interface Speaker {\n"
            "    void speak();\n"
            "}\n"
            "\n"
            "class Animal {\n"
            "}\n"
            "\n"
            "class Dog extends Animal implements Speaker {\n"
            "    public void speak() {\n"
            "    }\n"
            "}\n"
            "\n"
            "class Cat extends Animal implements Speaker {\n"
            "    public void speak() {\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Speaker": expect(
                loc=16, blanks=3, ncss=7, cyclomatic=1, halstead=(6, 2, 6, 2),
                methods=1, wmc=1, rfc=1, cbo=2, public_methods=1,
            ),
            "Animal": expect(loc=16, blanks=3, ncss=7, halstead=(2, 1, 2, 1), cbo=2, noc=2),
            "Dog": expect(
                loc=16, blanks=3, ncss=7, cyclomatic=1, halstead=(8, 4, 10, 4),
                methods=1, wmc=1, rfc=1, cbo=2, dit=1, interfaces_implemented=1,
                extends_flag=1, public_methods=1,
            ),
            "Cat": expect(
                loc=16, blanks=3, ncss=7, cyclomatic=1, halstead=(8, 4, 10, 4),
                methods=1, wmc=1, rfc=1, cbo=2, dit=1, interfaces_implemented=1,
                extends_flag=1, public_methods=1,
            ),
        },
    ),
    Case(
        file="Packaged.java",
        source=(
            "package com.acme.app;\n"
            "\n"
            "import java.io.File;\n"
            "\n"
            "public final class Packaged {\n"
            "    protected File home;\n"
            "\n"
            "    private Packaged(File home) {\n"
            "        this.home = home;\n"
            "    }\n"
            "\n"
            "    public static Packaged of(File home) {\n"
            "        return new Packaged(home);\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Packaged": expect(
                loc=15, blanks=4, ncss=8, cyclomatic=2, halstead=(15, 4, 26, 14),
                attributes=1, constructors=1, methods=1, static_methods=1,
                wmc=2, rfc=2, is_final=1, public_methods=1, imports_count=1,
                returns_count=1,
            ),
        },
    ),
    Case(
        file="Parametric.java",
        source=(
            "class Parametric {\n"
            "    void a(int k, String s) {\n"
            "    }\n"
            "\n"
            "    void b(int k) {\n"
            "    }\n"
            "\n"
            "    void c(String s, boolean f) {\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Parametric": expect(
                loc=10, blanks=2, ncss=4, cyclomatic=3, halstead=(8, 8, 22, 11),
                methods=3, nhd=1.0 / 3.0, lcom1=3, wmc=3, rfc=3,
                default_visibility_methods=3,
            ),
        },
    ),
    Case(
        file="Statics.java",
        source=(
            "class Statics {\n"
            "    static int seed;\n"
            "\n"
            "    static {\n"
            "        seed = 7;\n"
            "    }\n"
            "\n"
            "    int find(int n) {\n"
            "        outer:\n"
            "        for (int i = 1; i < 4; i++) {\n"
            "            for (int j = 1; j < 4; j++) {\n"
            "                // product probe\n"
            "                if (i * j == n) {\n"
            "                    break outer;\n"
            "                }\n"
            "            }\n"
            "        }\n"
            "        return n;\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Statics": expect(
                loc=20, blanks=2, comments=1, ncss=9, cyclomatic=4, cognitive=7,
                halstead=(17, 10, 50, 22), static_attributes=1, methods=1,
                wmc=4, rfc=1, default_visibility_methods=1, returns_count=1,
            ),
        },
    ),
    Case(
        file="Wide.java",
        source=(
            "import java.io.FileReader;\n"
            "import java.io.IOException;\n"
            "\n"
            "class Wide {\n"
            "    int slurp(String path) {\n"
            "        try (FileReader reader = new FileReader(path)) {\n"
            "            return reader.read();\n"
            "        } catch (IOException | RuntimeException trouble) {\n"
            "            return -1;\n"
            "        }\n"
            "    }\n"
            "}\n"
        ),
        classes={
            "Wide": expect(
                loc=12, blanks=1, ncss=8, cyclomatic=2, cognitive=1,
                halstead=(14, 11, 30, 14), methods=1, wmc=2, rfc=2,
                default_visibility_methods=1, imports_count=2,
                try_blocks=1, catch_blocks=1, returns_count=2,
            ),
        },
    ),
]


def class_rows() -> list[tuple[str, str, dict, str]]:
    """Flatten to (file, class_name, expected, source) tuples."""
    out = []
    for case in CASES:
        for name, exp in case.classes.items():
            out.append((case.file, name, exp, case.source))
    return out
