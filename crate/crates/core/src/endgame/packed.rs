/// Width of one stored entry.
pub const ENTRY_BITS: u32 = 7;
/// All ones: an entry that holds no value.
pub const SENTINEL: u8 = (1 << ENTRY_BITS) - 1;

/// Entries of one level, 7 bits each, packed most significant bit first in
/// rank order. Padding bits of the last byte are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PackedLevel {
    count: u64,
    bytes: Vec<u8>,
}

impl PackedLevel {
    /// A level of `count` entries, all set to `SENTINEL`.
    pub fn unsolved(count: u64) -> Self {
        let mut level = PackedLevel { count, bytes: vec![0; Self::byte_len(count)] };
        for i in 0..count {
            level.set(i, SENTINEL);
        }
        level
    }

    pub fn from_entries(entries: &[u8]) -> Self {
        let mut level =
            PackedLevel { count: entries.len() as u64, bytes: vec![0; Self::byte_len(entries.len() as u64)] };
        for (i, &e) in entries.iter().enumerate() {
            level.set(i as u64, e);
        }
        level
    }

    /// Wraps packed bytes read from disk; `None` if the length is wrong.
    pub fn from_bytes(count: u64, bytes: Vec<u8>) -> Option<Self> {
        (bytes.len() == Self::byte_len(count)).then_some(PackedLevel { count, bytes })
    }

    pub fn byte_len(count: u64) -> usize {
        (count * u64::from(ENTRY_BITS)).div_ceil(8) as usize
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn bytes_mut(&mut self) -> &mut [u8] {
        &mut self.bytes
    }

    pub fn get(&self, index: u64) -> u8 {
        assert!(index < self.count, "entry {index} out of {}", self.count);
        let bit = index * u64::from(ENTRY_BITS);
        let byte = (bit / 8) as usize;
        let shift = (bit % 8) as u32;
        let hi = u16::from(self.bytes[byte]) << 8;
        let lo = self.bytes.get(byte + 1).copied().map_or(0, u16::from);
        let window = hi | lo;
        ((window >> (16 - ENTRY_BITS - shift)) as u8) & SENTINEL
    }

    pub fn set(&mut self, index: u64, value: u8) {
        assert!(index < self.count, "entry {index} out of {}", self.count);
        assert!(value <= SENTINEL);
        let bit = index * u64::from(ENTRY_BITS);
        let byte = (bit / 8) as usize;
        let shift = 16 - ENTRY_BITS - (bit % 8) as u32;
        let mask = u16::from(SENTINEL) << shift;
        let bits = u16::from(value) << shift;
        let [hi_mask, lo_mask] = mask.to_be_bytes();
        let [hi, lo] = bits.to_be_bytes();
        self.bytes[byte] = (self.bytes[byte] & !hi_mask) | hi;
        if lo_mask != 0 {
            self.bytes[byte + 1] = (self.bytes[byte + 1] & !lo_mask) | lo;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn msb_first_layout() {
        // 1111111 0000001 1010101 -> 11111110 00000110 10101000
        let level = PackedLevel::from_entries(&[0x7f, 0x01, 0x55]);
        assert_eq!(level.bytes(), &[0b1111_1110, 0b0000_0110, 0b1010_1000]);
        assert_eq!((level.get(0), level.get(1), level.get(2)), (0x7f, 0x01, 0x55));
    }

    #[test]
    fn sizes() {
        assert_eq!(PackedLevel::byte_len(0), 0);
        assert_eq!(PackedLevel::byte_len(1), 1);
        assert_eq!(PackedLevel::byte_len(8), 7);
        assert_eq!(PackedLevel::byte_len(9), 8);
        assert_eq!(PackedLevel::unsolved(12).bytes().len(), 11);
        assert!(PackedLevel::from_bytes(12, vec![0; 10]).is_none());
    }

    #[test]
    fn set_leaves_neighbours_alone() {
        let mut level = PackedLevel::unsolved(20);
        level.set(7, 0);
        level.set(8, 42);
        for i in 0..20 {
            let expect = match i {
                7 => 0,
                8 => 42,
                _ => SENTINEL,
            };
            assert_eq!(level.get(i), expect, "entry {i}");
        }
    }
}
