pub struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub fn new(size: usize) -> Self {
        Dsu {
            parent: (0..size).collect(),
        }
    }

    pub fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    /// Groups all elements by representative, each group sorted ascending,
    /// groups ordered by smallest member.
    pub fn components(&mut self) -> Vec<Vec<usize>> {
        let size = self.parent.len();
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut index = vec![usize::MAX; size];
        for x in 0..size {
            let r = self.find(x);
            if index[r] == usize::MAX {
                index[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[index[r]].push(x);
        }
        groups
    }
}
