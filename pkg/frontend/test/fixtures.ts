// Recorded play-service responses (verbatim), used as contract
// fixtures: the board must render these payloads exactly.

import { SessionView } from "../src/types.js";

export const freshPath3: SessionView = {
  "id": "77967b777005",
  "family": "path:3",
  "mode": "two-human",
  "engineSeat": null,
  "k": 2,
  "graph": {
    "n": 3,
    "edges": [
      [
        1,
        2
      ],
      [
        2,
        3
      ]
    ],
    "loops": false,
    "layout": [
      [
        0.0,
        0.5
      ],
      [
        0.5,
        0.5
      ],
      [
        1.0,
        0.5
      ]
    ]
  },
  "coloring": [
    null,
    null,
    null
  ],
  "movesMade": 0,
  "moveNumber": 0,
  "turn": "Player1",
  "terminal": false,
  "winner": null,
  "palette": [],
  "legalMoves": [
    [
      1,
      1
    ],
    [
      1,
      2
    ],
    [
      2,
      1
    ],
    [
      2,
      2
    ],
    [
      3,
      1
    ],
    [
      3,
      2
    ]
  ],
  "markable": [
    true,
    true,
    true
  ],
  "history": [],
  "engineMove": null
} as SessionView;

export const endgamePath5: SessionView = {
  "id": "37522365bdca",
  "family": "path:5",
  "mode": "two-human",
  "engineSeat": null,
  "k": 3,
  "graph": {
    "n": 5,
    "edges": [
      [
        1,
        2
      ],
      [
        2,
        3
      ],
      [
        3,
        4
      ],
      [
        4,
        5
      ]
    ],
    "loops": false,
    "layout": [
      [
        0.0,
        0.5
      ],
      [
        0.25,
        0.5
      ],
      [
        0.5,
        0.5
      ],
      [
        0.75,
        0.5
      ],
      [
        1.0,
        0.5
      ]
    ]
  },
  "coloring": [
    1,
    null,
    1,
    2,
    null
  ],
  "movesMade": 3,
  "moveNumber": 3,
  "turn": "Player2",
  "terminal": false,
  "winner": null,
  "palette": [
    [
      1,
      2
    ]
  ],
  "legalMoves": [
    [
      5,
      2
    ],
    [
      5,
      3
    ]
  ],
  "markable": [
    false,
    false,
    false,
    false,
    true
  ],
  "history": [
    [
      1,
      1
    ],
    [
      3,
      1
    ],
    [
      4,
      2
    ]
  ],
  "engineMove": null
} as SessionView;

export const terminalPath5: SessionView = {
  "id": "37522365bdca",
  "family": "path:5",
  "mode": "two-human",
  "engineSeat": null,
  "k": 3,
  "graph": {
    "n": 5,
    "edges": [
      [
        1,
        2
      ],
      [
        2,
        3
      ],
      [
        3,
        4
      ],
      [
        4,
        5
      ]
    ],
    "loops": false,
    "layout": [
      [
        0.0,
        0.5
      ],
      [
        0.25,
        0.5
      ],
      [
        0.5,
        0.5
      ],
      [
        0.75,
        0.5
      ],
      [
        1.0,
        0.5
      ]
    ]
  },
  "coloring": [
    1,
    null,
    1,
    2,
    3
  ],
  "movesMade": 4,
  "moveNumber": 4,
  "turn": null,
  "terminal": true,
  "winner": "Player2",
  "palette": [
    [
      1,
      2
    ],
    [
      2,
      3
    ]
  ],
  "legalMoves": [],
  "markable": [
    false,
    false,
    false,
    false,
    false
  ],
  "history": [
    [
      1,
      1
    ],
    [
      3,
      1
    ],
    [
      4,
      2
    ],
    [
      5,
      3
    ]
  ],
  "engineMove": null
} as SessionView;

export const engineOpenedPath6: SessionView = {
  "id": "cde21ea27d56",
  "family": "path:6",
  "mode": "engine-first",
  "engineSeat": "Player1",
  "k": 3,
  "graph": {
    "n": 6,
    "edges": [
      [
        1,
        2
      ],
      [
        2,
        3
      ],
      [
        3,
        4
      ],
      [
        4,
        5
      ],
      [
        5,
        6
      ]
    ],
    "loops": false,
    "layout": [
      [
        0.0,
        0.5
      ],
      [
        0.2,
        0.5
      ],
      [
        0.4,
        0.5
      ],
      [
        0.6,
        0.5
      ],
      [
        0.8,
        0.5
      ],
      [
        1.0,
        0.5
      ]
    ]
  },
  "coloring": [
    null,
    1,
    null,
    null,
    null,
    null
  ],
  "movesMade": 1,
  "moveNumber": 1,
  "turn": "Player2",
  "terminal": false,
  "winner": null,
  "palette": [],
  "legalMoves": [
    [
      1,
      1
    ],
    [
      1,
      2
    ],
    [
      1,
      3
    ],
    [
      3,
      1
    ],
    [
      3,
      2
    ],
    [
      3,
      3
    ],
    [
      4,
      1
    ],
    [
      4,
      2
    ],
    [
      4,
      3
    ],
    [
      5,
      1
    ],
    [
      5,
      2
    ],
    [
      5,
      3
    ],
    [
      6,
      1
    ],
    [
      6,
      2
    ],
    [
      6,
      3
    ]
  ],
  "markable": [
    true,
    false,
    true,
    true,
    true,
    true
  ],
  "history": [
    [
      2,
      1
    ]
  ],
  "engineMove": [
    2,
    1
  ]
} as SessionView;

